#include "mtspace/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtspace/categorical.hpp"
#include "mtspace/closure.hpp"
#include "mtspace/errors.hpp"
#include "mtspace/family.hpp"
#include "mtspace/generating.hpp"
#include "mtspace/normalform.hpp"
#include "mtspace/oracle.hpp"
#include "mtspace/parser.hpp"

namespace mts {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string family_path;
  std::string theory;
  std::string theory_file;
  std::string sentence;
  std::string sig;
  bool sig_given = false;
  std::string mode;
  std::string property;
  std::string sub;
  std::string target;
  std::string tie_break = "prefer-positive";
  bool no_flip = false;
  std::uint64_t k = 2;
  std::uint64_t n = 1;
  std::uint64_t budget = 1000;
  std::uint64_t seed = 2026;
};

Signature parse_sig_list(const std::string& text) {
  std::vector<std::string> symbols;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ' ')) {
    std::istringstream commas(token);
    std::string name;
    while (std::getline(commas, name, ','))
      if (!name.empty()) symbols.push_back(name);
  }
  return Signature(symbols);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Family load_family(const Options& opt) { return parse_family_file(read_file(opt.family_path)); }

std::string theory_text(const Options& opt) {
  if (!opt.theory.empty()) return opt.theory;
  if (!opt.theory_file.empty()) return read_file(opt.theory_file);
  throw PreconditionError("a theory is required (--theory or --theory-file)");
}

TheoryVector load_theory(const Options& opt) {
  if (opt.sig_given) return parse_theory(theory_text(opt), parse_sig_list(opt.sig));
  return parse_theory_infer(theory_text(opt)).first;
}

TheoryVector load_theory(const Options& opt, const Signature& sig) {
  return parse_theory(theory_text(opt), sig);
}

json theory_json(const TheoryVector& t) {
  json cells = json::object();
  for (CellIndex c = 0; c < t.cell_count(); ++c)
    cells[t.sig().cell_name(c)] = t.at(c).to_string();
  return json{{"signature", t.sig().symbols()}, {"cells", cells}};
}

json family_json(const Family& f) {
  json boxes = json::array();
  for (const Box& b : f.boxes()) {
    json cells = json::object();
    for (CellIndex c = 0; c < b.cells().size(); ++c) {
      if (b.cell(c) == ValueSet::single(0)) continue;
      cells[f.sig().cell_name(c)] = b.cell(c).to_string();
    }
    boxes.push_back(cells);
  }
  return json{{"signature", f.sig().symbols()}, {"boxes", boxes}};
}

json count_json(const CardCount& c) {
  json j{{"infinite", c.is_infinite()}};
  if (c.is_finite()) j["value"] = c.value();
  return j;
}

void emit(const Options& opt, std::ostream& out, const json& structured,
          const std::string& text) {
  if (opt.json) out << structured.dump(2) << '\n';
  else out << text;
}

int verdict(const Options& opt, std::ostream& out, const std::string& command, bool value,
            json extra = json::object()) {
  json j{{"command", command}, {"result", value}};
  j.update(extra);
  std::string text = value ? "true\n" : "false\n";
  emit(opt, out, j, text);
  return value ? 0 : 1;
}

int cmd_qe(const Options& opt, std::ostream& out) {
  Sentence s;
  Signature sig;
  if (opt.sig_given) {
    sig = parse_sig_list(opt.sig);
    s = parse_sentence(opt.sentence, sig);
  } else {
    std::tie(s, sig) = parse_sentence_infer(opt.sentence);
  }
  NormalForm nf = to_normal_form(s, sig);
  std::string text = print_normal_form(nf);
  emit(opt, out, json{{"command", "qe"}, {"normal_form", text}}, text + "\n");
  return 0;
}

int cmd_holds(const Options& opt, std::ostream& out) {
  TheoryVector t = load_theory(opt);
  Sentence s = parse_sentence(opt.sentence, t.sig());
  return verdict(opt, out, "holds", holds(t, s), json{{"theory", theory_json(t)}});
}

int cmd_closure(const Options& opt, std::ostream& out) {
  Family result = closure(load_family(opt));
  emit(opt, out, json{{"command", "closure"}, {"family", family_json(result)}},
       print_family_file(result));
  return 0;
}

int cmd_accpoints(const Options& opt, std::ostream& out) {
  Family result = accumulation_points(load_family(opt));
  emit(opt, out, json{{"command", "accpoints"}, {"family", family_json(result)}},
       print_family_file(result));
  return 0;
}

int cmd_espectrum(const Options& opt, std::ostream& out) {
  Family f = load_family(opt);
  CardCount sp = e_spectrum(f);
  Family fresh = new_accumulation_points(f);
  json j{{"command", "espectrum"}, {"espectrum", count_json(sp)}};
  std::string text = sp.to_string() + "\n";
  if (sp.is_infinite()) {
    j["new_points"] = family_json(fresh);
    text += "\n" + print_family_file(fresh);
  }
  emit(opt, out, j, text);
  return 0;
}

int cmd_eclosed(const Options& opt, std::ostream& out) {
  return verdict(opt, out, "eclosed", is_e_closed(load_family(opt)));
}

int cmd_approxby(const Options& opt, std::ostream& out) {
  Family f = load_family(opt);
  TheoryVector t = load_theory(opt, f.sig());
  return verdict(opt, out, "approxby", is_approximated_by(t, f),
                 json{{"theory", theory_json(t)}});
}

int cmd_genset(const Options& opt, std::ostream& out) {
  if (opt.mode != "least")
    throw PreconditionError("genset supports the 'least' mode, got '" + opt.mode + "'");
  std::optional<Family> least = least_generating_set(load_family(opt));
  if (!least) {
    emit(opt, out, json{{"command", "genset"}, {"exists", false}}, "none\n");
    return 1;
  }
  emit(opt, out, json{{"command", "genset"}, {"exists", true}, {"family", family_json(*least)}},
       print_family_file(*least));
  return 0;
}

int cmd_isolate(const Options& opt, std::ostream& out) {
  Family f = load_family(opt);
  TheoryVector t = load_theory(opt, f.sig());
  Witnessed w = is_relatively_finitely_axiomatizable(t, f);
  json j{{"command", "isolate"}, {"result", w.value}};
  if (w.witness) j["witness"] = print_sentence(*w.witness);
  std::string text = w.value ? print_sentence(*w.witness) + "\n" : "not isolated\n";
  emit(opt, out, j, text);
  return w.value ? 0 : 1;
}

int cmd_markers(const Options& opt, std::ostream& out) {
  auto [sig, expanded] = expand_with_markers(load_family(opt));
  emit(opt, out, json{{"command", "markers"}, {"family", family_json(expanded)}},
       print_family_file(expanded));
  return 0;
}

int cmd_buildacc(const Options& opt, std::ostream& out) {
  TieBreak tb;
  if (opt.tie_break == "prefer-positive") tb = TieBreak::PreferPositive;
  else if (opt.tie_break == "prefer-negative") tb = TieBreak::PreferNegative;
  else throw PreconditionError("--tie-break must be prefer-positive or prefer-negative");
  TheoryVector t = build_accumulation_point(load_family(opt), tb);
  emit(opt, out, json{{"command", "buildacc"}, {"theory", theory_json(t)}},
       t.to_string() + "\n");
  return 0;
}

int cmd_ecategorical(const Options& opt, std::ostream& out) {
  return verdict(opt, out, "ecategorical", is_e_categorical(load_family(opt)));
}

int cmd_eminimal(const Options& opt, std::ostream& out) {
  Family f = load_family(opt);
  bool result = is_e_minimal(f);
  json extra = json::object();
  std::string text = result ? "true\n" : "false\n";
  if (!result) {
    EMinimalCheck direct = check_e_minimal_direct(f);
    if (direct.split_witness) {
      extra["split"] = print_sentence(*direct.split_witness);
      text += print_sentence(*direct.split_witness) + "\n";
    }
  }
  json j{{"command", "eminimal"}, {"result", result}};
  j.update(extra);
  emit(opt, out, j, text);
  return result ? 0 : 1;
}

int cmd_partition(const Options& opt, std::ostream& out) {
  std::vector<Family> parts = partition_e_categorical(load_family(opt));
  json jparts = json::array();
  std::string text;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    jparts.push_back(family_json(parts[i]));
    text += "# part " + std::to_string(i + 1) + "\n" + print_family_file(parts[i]);
    if (i + 1 < parts.size()) text += "\n";
  }
  emit(opt, out, json{{"command", "partition"}, {"parts", jparts}}, text);
  return 0;
}

int cmd_witnesses(const Options& opt, std::ostream& out) {
  auto witnesses = spectrum_witnesses(load_family(opt), opt.k);
  if (!witnesses) {
    emit(opt, out, json{{"command", "witnesses"}, {"exists", false}}, "none\n");
    return 1;
  }
  json sentences = json::array();
  std::string text;
  for (const Sentence& s : *witnesses) {
    sentences.push_back(print_sentence(s));
    text += print_sentence(s) + "\n";
  }
  emit(opt, out, json{{"command", "witnesses"}, {"exists", true}, {"sentences", sentences}},
       text);
  return 0;
}

int cmd_approx(const Options& opt, std::ostream& out) {
  TheoryVector t = finite_approximation(load_theory(opt), opt.n);
  emit(opt, out, json{{"command", "approx"}, {"theory", theory_json(t)}}, t.to_string() + "\n");
  return 0;
}

int cmd_pseudofinite(const Options& opt, std::ostream& out) {
  return verdict(opt, out, "pseudofinite", is_pseudo_finite(load_theory(opt)));
}

int cmd_finax(const Options& opt, std::ostream& out) {
  Witnessed w = is_finitely_axiomatizable(load_theory(opt));
  json j{{"command", "finax"}, {"result", w.value}};
  std::string text = w.value ? "true\n" : "false\n";
  if (w.witness) {
    j["witness"] = print_sentence(*w.witness);
    text += print_sentence(*w.witness) + "\n";
  }
  emit(opt, out, j, text);
  return w.value ? 0 : 1;
}

int cmd_restrict(const Options& opt, std::ostream& out) {
  TheoryVector t = load_theory(opt);
  Signature sub = parse_sig_list(opt.sub);
  Signature target = opt.target.empty() ? t.sig() : parse_sig_list(opt.target);
  PadMode mode = opt.no_flip ? PadMode::AllEmpty : PadMode::FlipEmptyComplete;
  TheoryVector result = restrict_and_pad(t, sub, target, mode);
  emit(opt, out, json{{"command", "restrict"}, {"theory", theory_json(result)}},
       result.to_string() + "\n");
  return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
  if (opt.mode != "check")
    throw PreconditionError("oracle supports the 'check' mode, got '" + opt.mode + "'");
  auto ce = oracle::search_counterexample(opt.property, opt.budget, opt.seed);
  if (!ce) {
    emit(opt, out,
         json{{"command", "oracle"},
              {"property", opt.property},
              {"counterexample", nullptr},
              {"trials", opt.budget}},
         "no counterexample found (" + std::to_string(opt.budget) + " trials)\n");
    return 0;
  }
  emit(opt, out,
       json{{"command", "oracle"},
            {"property", opt.property},
            {"counterexample", ce->description},
            {"seed", ce->seed}},
       "counterexample found (seed " + std::to_string(ce->seed) + "):\n" + ce->description +
           "\n");
  return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"exact closure, spectrum and generating-set computations for families of "
               "complete monadic theories"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "structured JSON output");

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("family", opt.family_path, "family file")->required();
  };
  auto add_theory = [&](CLI::App* sub) {
    sub->add_option("--theory", opt.theory, "inline theory, e.g. \"!P=0,P=inf\"");
    sub->add_option("--theory-file", opt.theory_file, "file with a theory literal");
    sub->add_option("--sig", opt.sig, "signature, e.g. \"P Q\"")
        ->each([&](const std::string&) { opt.sig_given = true; });
  };

  CLI::App* qe = app.add_subcommand("qe", "counting normal form of a sentence");
  qe->add_option("sentence", opt.sentence, "sentence text")->required();
  qe->add_option("--sig", opt.sig, "signature")->each([&](const std::string&) {
    opt.sig_given = true;
  });

  CLI::App* holds_cmd = app.add_subcommand("holds", "does the sentence belong to the theory");
  add_theory(holds_cmd);
  holds_cmd->add_option("--sentence", opt.sentence, "sentence text")->required();

  for (const char* name : {"closure", "accpoints", "espectrum", "eclosed", "ecategorical",
                           "eminimal", "partition", "markers", "buildacc"})
    add_family(app.add_subcommand(name, ""));
  app.get_subcommand("closure")->description("E-closure of a family");
  app.get_subcommand("accpoints")->description("accumulation points of a family");
  app.get_subcommand("espectrum")->description("number of new accumulation points");
  app.get_subcommand("eclosed")->description("is the family E-closed");
  app.get_subcommand("ecategorical")->description("has the family exactly one accumulation point");
  app.get_subcommand("eminimal")->description("does every sentence split off a finite side");
  app.get_subcommand("partition")->description("split a closed family into e-categorical parts");
  app.get_subcommand("markers")->description("expand an explicit family with marker predicates");
  app.get_subcommand("buildacc")
      ->description("greedy construction of an accumulation point")
      ->add_option("--tie-break", opt.tie_break, "prefer-positive | prefer-negative");

  CLI::App* approxby = app.add_subcommand("approxby", "is the theory approximated by the family");
  add_family(approxby);
  add_theory(approxby);

  CLI::App* genset = app.add_subcommand("genset", "least generating set of a closed family");
  genset->add_option("mode", opt.mode, "least")->required();
  add_family(genset);

  CLI::App* isolate = app.add_subcommand("isolate", "is the theory isolated in the family");
  add_family(isolate);
  add_theory(isolate);

  CLI::App* witnesses = app.add_subcommand("witnesses", "pairwise inconsistent sentences with "
                                                        "infinite neighbourhoods");
  add_family(witnesses);
  witnesses->add_option("-k", opt.k, "how many witnesses")->required();

  CLI::App* approx = app.add_subcommand("approx", "finite approximation of a theory");
  add_theory(approx);
  approx->add_option("-n", opt.n, "approximation level")->required();

  add_theory(app.add_subcommand("pseudofinite", "is the theory pseudo-finite"));
  add_theory(app.add_subcommand("finax", "is the theory finitely axiomatizable"));

  CLI::App* restrict_cmd = app.add_subcommand("restrict", "restrict a theory and pad with "
                                                          "empty or complete predicates");
  add_theory(restrict_cmd);
  restrict_cmd->add_option("--sub", opt.sub, "signature to keep");
  restrict_cmd->add_option("--target", opt.target, "signature after padding");
  restrict_cmd->add_flag("--no-flip", opt.no_flip, "pad with empty predicates only");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "randomized brute-force property checks");
  oracle_cmd->add_option("mode", opt.mode, "check")->required();
  oracle_cmd->add_option("property", opt.property, "property identifier")->required();
  oracle_cmd->add_option("--budget", opt.budget, "number of trials");
  oracle_cmd->add_option("--seed", opt.seed, "base random seed");

  std::vector<const char*> argv;
  argv.push_back("mtspace");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (app.got_subcommand("qe")) return cmd_qe(opt, out);
    if (app.got_subcommand("holds")) return cmd_holds(opt, out);
    if (app.got_subcommand("closure")) return cmd_closure(opt, out);
    if (app.got_subcommand("accpoints")) return cmd_accpoints(opt, out);
    if (app.got_subcommand("espectrum")) return cmd_espectrum(opt, out);
    if (app.got_subcommand("eclosed")) return cmd_eclosed(opt, out);
    if (app.got_subcommand("approxby")) return cmd_approxby(opt, out);
    if (app.got_subcommand("genset")) return cmd_genset(opt, out);
    if (app.got_subcommand("isolate")) return cmd_isolate(opt, out);
    if (app.got_subcommand("markers")) return cmd_markers(opt, out);
    if (app.got_subcommand("buildacc")) return cmd_buildacc(opt, out);
    if (app.got_subcommand("ecategorical")) return cmd_ecategorical(opt, out);
    if (app.got_subcommand("eminimal")) return cmd_eminimal(opt, out);
    if (app.got_subcommand("partition")) return cmd_partition(opt, out);
    if (app.got_subcommand("witnesses")) return cmd_witnesses(opt, out);
    if (app.got_subcommand("approx")) return cmd_approx(opt, out);
    if (app.got_subcommand("pseudofinite")) return cmd_pseudofinite(opt, out);
    if (app.got_subcommand("finax")) return cmd_finax(opt, out);
    if (app.got_subcommand("restrict")) return cmd_restrict(opt, out);
    if (app.got_subcommand("oracle")) return cmd_oracle(opt, out);
    err << "no subcommand\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

} // namespace mts
