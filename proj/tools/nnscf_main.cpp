#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nnscf/arc_diagram.hpp"
#include "nnscf/errors.hpp"
#include "nnscf/field.hpp"
#include "nnscf/hopf.hpp"
#include "nnscf/json_io.hpp"
#include "nnscf/pattern_group.hpp"
#include "nnscf/poset.hpp"
#include "nnscf/render.hpp"
#include "nnscf/supercharacter.hpp"

namespace {

using namespace nnscf;

struct FieldOpts {
  std::int64_t q = 2;
  int e = 1;
  std::vector<std::int64_t> modulus;
};

void add_field_opts(CLI::App* cmd, FieldOpts& f) {
  cmd->add_option("--q", f.q, "prime characteristic of the coefficient field");
  cmd->add_option("--e", f.e, "extension degree (the field has q^e elements)");
  cmd->add_option("--modulus", f.modulus,
                  "monic irreducible modulus coefficients, constant term first")
      ->delimiter(',');
}

FieldPtr make_field(const FieldOpts& f) { return Field::make(f.q, f.e, f.modulus); }

Int parse_limit_text(const std::string& text, const std::string& origin) {
  if (text.empty()) throw value_error(origin + " limit must be a positive integer");
  for (char ch : text)
    if (ch < '0' || ch > '9') throw value_error(origin + " limit must be a positive integer");
  Int v(text);
  if (v <= 0) throw value_error(origin + " limit must be a positive integer");
  return v;
}

Int resolve_limit(const std::string& flag_text) {
  if (!flag_text.empty()) return parse_limit_text(flag_text, "--limit");
  if (const char* env = std::getenv("NNSCF_LIMIT")) return parse_limit_text(env, "NNSCF_LIMIT");
  return Int(1) << 20;
}

void add_common_opts(CLI::App* cmd, std::string& limit_text, std::string& format,
                     const std::vector<std::string>& formats) {
  cmd->add_option("--limit", limit_text, "enumeration size guard (default 2^20 or NNSCF_LIMIT)");
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember(formats));
}

void emit(const std::string& text) { std::cout << text; }

std::string checks_ascii(const std::vector<CheckResult>& checks) {
  std::string out;
  for (const auto& c : checks) {
    out += "check " + c.name + ": " + (c.pass ? "pass" : "FAIL");
    if (!c.pass) out += " (" + c.witness + ")";
    out += "\n";
  }
  return out;
}

int cmd_enumerate(const std::string& poset_file, const FieldOpts& fopts, bool all,
                  const std::string& format, const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  Poset poset = poset_from_json(load_json_file(poset_file));
  FieldPtr field = make_field(fopts);
  auto diagrams = all ? enumerate_partitions(poset, field, limit)
                      : enumerate_nonnesting(poset, field, limit);
  FieldPtr two = Field::make(2, 1, {});
  auto shapes = all ? enumerate_partitions(poset, two, limit)
                    : enumerate_nonnesting(poset, two, limit);
  Int poly = 0;
  for (const auto& s : shapes) poly += int_pow(Int(field->q() - 1), s.arc_count());
  if (poly != Int(static_cast<std::uint64_t>(diagrams.size())))
    throw check_error("direct count " + std::to_string(diagrams.size()) +
                      " disagrees with the shape polynomial " + poly.str());
  if (format == "ascii") {
    std::string out;
    for (const auto& d : diagrams) out += d.to_string() + "\n";
    out += "count: " + std::to_string(diagrams.size()) + "\n";
    out += "shapes: " + std::to_string(shapes.size()) + "\n";
    emit(out);
    return 0;
  }
  Json j;
  j["poset"] = poset_to_json(poset);
  j["field"] = field_to_json(*field);
  j["kind"] = all ? "all" : "nonnesting";
  j["count"] = static_cast<std::uint64_t>(diagrams.size());
  j["shape_count"] = static_cast<std::uint64_t>(shapes.size());
  Json list = Json::array();
  for (const auto& d : diagrams) list.push_back(Json{{"arcs", arcs_to_json(d)}});
  j["diagrams"] = list;
  emit(dump_json(j));
  return 0;
}

int cmd_table(const std::string& poset_file, const FieldOpts& fopts, const std::string& theory_name,
              bool oracle, const std::string& format, const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  Poset poset = poset_from_json(load_json_file(poset_file));
  FieldPtr field = make_field(fopts);
  PatternGroup grp(poset, field);
  Theory theory = Theory::nonnesting;
  if (theory_name == "algebra")
    theory = Theory::algebra;
  else if (theory_name != "nonnesting")
    throw value_error("unknown theory: " + theory_name);
  CharacterTable table = build_table(grp, theory, limit);
  std::vector<CheckResult> oracle_checks;
  if (oracle) {
    if (theory == Theory::nonnesting) {
      SctReport report = verify_sct(grp, limit);
      oracle_checks = report.checks;
    } else {
      CheckResult result{"dual-orbit-oracle", true, ""};
      for (std::size_t i = 0; i < table.diagrams.size() && result.pass; ++i) {
        ClassFunction oracle_fn =
            dual_orbit_character(grp, Functional::from_diagram(table.diagrams[i]), limit);
        for (std::size_t j = 0; j < table.reps.size(); ++j) {
          if (oracle_fn.value(table.reps[j]) == table.values[i][j]) continue;
          result.pass = false;
          result.witness = "character " + table.diagrams[i].to_string() + " at class " +
                           table.diagrams[j].to_string();
          break;
        }
      }
      oracle_checks.push_back(result);
    }
  }
  bool oracle_pass = true;
  for (const auto& c : oracle_checks) oracle_pass = oracle_pass && c.pass;
  if (format == "ascii") {
    std::string out = render_table_ascii(table);
    if (oracle) out += checks_ascii(oracle_checks);
    emit(out);
  } else if (format == "latex") {
    emit(render_table_latex(table));
  } else {
    Json j = table_to_json(table);
    if (oracle) {
      Json v;
      v["checks"] = check_results_to_json(oracle_checks);
      v["pass"] = oracle_pass;
      j["verification"] = v;
    }
    emit(dump_json(j));
  }
  if (oracle && !oracle_pass)
    throw check_error("the closed-formula table disagrees with the oracle");
  return 0;
}

int cmd_verify_sct(const std::string& poset_file, const FieldOpts& fopts,
                   const std::string& format, const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  Poset poset = poset_from_json(load_json_file(poset_file));
  PatternGroup grp(poset, make_field(fopts));
  SctReport report = verify_sct(grp, limit);
  if (format == "ascii") {
    std::string out = "group order: " + report.group_order.str() + "\n";
    out += "classes: " + std::to_string(report.class_count) + "\n";
    out += checks_ascii(report.checks);
    out += std::string("result: ") + (report.pass() ? "pass" : "FAIL") + "\n";
    emit(out);
  } else {
    emit(dump_json(sct_report_to_json(report)));
  }
  return report.pass() ? 0 : 1;
}

int cmd_verify_hopf(int n, const FieldOpts& fopts, const std::string& format,
                    const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  HopfReport report = verify_hopf(n, make_field(fopts), limit);
  if (format == "ascii") {
    std::string out = checks_ascii(report.checks);
    if (!report.noncommutative_witness.empty())
      out += "noncommutative witness: " + report.noncommutative_witness + "\n";
    out += std::string("result: ") + (report.pass() ? "pass" : "FAIL") + "\n";
    emit(out);
  } else {
    emit(dump_json(hopf_report_to_json(report)));
  }
  return report.pass() ? 0 : 1;
}

int cmd_hopf_free(int n, const FieldOpts& fopts, const std::string& format,
                  const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  FreeReport report = verify_free(n, make_field(fopts), limit);
  if (format == "ascii") {
    std::string out;
    out += "atomic counts:";
    for (const auto& v : report.linear_atomic_counts) out += " " + v.str();
    out += "\ndims:";
    for (const auto& v : report.linear_dims) out += " " + v.str();
    out += "\n" + checks_ascii(report.checks);
    out += std::string("result: ") + (report.pass() ? "pass" : "FAIL") + "\n";
    emit(out);
  } else {
    emit(dump_json(free_report_to_json(report)));
  }
  return report.pass() ? 0 : 1;
}

int cmd_render(const std::string& poset_file, const std::string& diagram_file, int extension,
               const std::string& format, const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  if (poset_file.empty() == diagram_file.empty())
    throw value_error("render needs exactly one of --poset or --diagram");
  if (!poset_file.empty()) {
    Poset poset = poset_from_json(load_json_file(poset_file));
    if (format == "latex")
      emit(render_poset_latex(poset));
    else if (format == "json")
      emit(dump_json(poset_to_json(poset)));
    else
      emit(render_poset_ascii(poset));
    return 0;
  }
  ArcDiagram d = diagram_from_json(load_json_file(diagram_file));
  if (format == "json") {
    emit(dump_json(diagram_to_json(d)));
    return 0;
  }
  auto extensions = d.poset().linear_extensions(limit);
  if (extension < 0 || static_cast<std::size_t>(extension) >= extensions.size())
    throw value_error("extension index out of range; the poset has " +
                      std::to_string(extensions.size()) + " linear extensions");
  const auto& order = extensions[static_cast<std::size_t>(extension)];
  emit(format == "latex" ? render_arcs_latex(d, order) : render_arcs_ascii(d, order));
  return 0;
}

int cmd_hopf_product(const std::string& left_file, const std::string& right_file,
                     const std::string& basis_text, bool functional, const std::string& format,
                     const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  ScfBasis basis = basis_from_name(basis_text);
  ScfVector a = scf_vector_from_json(load_json_file(left_file)).in_basis(basis, limit);
  ScfVector b = scf_vector_from_json(load_json_file(right_file)).in_basis(basis, limit);
  ScfVector out = functional ? hopf_product_functional(a, b, limit) : hopf_product(a, b, limit);
  if (format == "ascii")
    emit(out.to_string() + "\n");
  else
    emit(dump_json(scf_vector_to_json(out)));
  return 0;
}

int cmd_hopf_coproduct(const std::string& input_file, const std::vector<std::string>& split,
                       const std::string& basis_text, bool functional, const std::string& format,
                       const std::string& limit_text) {
  Int limit = resolve_limit(limit_text);
  ScfBasis basis = basis_from_name(basis_text);
  ScfVector a = scf_vector_from_json(load_json_file(input_file)).in_basis(basis, limit);
  TensorElement out =
      functional ? hopf_coproduct_functional(a, split, limit) : hopf_coproduct(a, split, limit);
  if (format == "ascii")
    emit(out.to_string() + "\n");
  else
    emit(dump_json(tensor_to_json(out)));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nonnesting supercharacter theories of pattern groups over GF(q)"};
  app.require_subcommand(1);

  std::function<int()> action;

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list set partitions of a poset");
  {
    static std::string poset_file, format = "json", limit_text;
    static FieldOpts fopts;
    static bool all = false;
    enumerate->add_option("--poset", poset_file, "poset JSON file")->required();
    add_field_opts(enumerate, fopts);
    enumerate->add_flag("--all", all, "include nesting diagrams");
    add_common_opts(enumerate, limit_text, format, {"json", "ascii"});
    enumerate->callback(
        [&]() { action = [&]() { return cmd_enumerate(poset_file, fopts, all, format, limit_text); }; });
  }

  // table
  auto* table = app.add_subcommand("table", "supercharacter table of the pattern group");
  {
    static std::string poset_file, theory = "nonnesting", format = "json", limit_text;
    static FieldOpts fopts;
    static bool oracle = false;
    table->add_option("--poset", poset_file, "poset JSON file")->required();
    add_field_opts(table, fopts);
    table->add_option("--theory", theory, "nonnesting or algebra")
        ->check(CLI::IsMember({"nonnesting", "algebra"}));
    table->add_flag("--oracle", oracle, "cross-check against the group-theoretic oracle");
    add_common_opts(table, limit_text, format, {"json", "ascii", "latex"});
    table->callback([&]() {
      action = [&]() { return cmd_table(poset_file, fopts, theory, oracle, format, limit_text); };
    });
  }

  // verify sct | verify hopf
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);
  {
    static std::string poset_file, format = "json", limit_text;
    static FieldOpts fopts;
    auto* sct = verify->add_subcommand("sct", "supercharacter theory axioms and oracles");
    sct->add_option("--poset", poset_file, "poset JSON file")->required();
    add_field_opts(sct, fopts);
    add_common_opts(sct, limit_text, format, {"json", "ascii"});
    sct->callback(
        [&]() { action = [&]() { return cmd_verify_sct(poset_file, fopts, format, limit_text); }; });
  }
  {
    static int n = 0;
    static std::string format = "json", limit_text;
    static FieldOpts fopts;
    auto* hopf = verify->add_subcommand("hopf", "Hopf monoid axioms on ground sets up to n");
    hopf->add_option("--n", n, "ground set size")->required();
    add_field_opts(hopf, fopts);
    add_common_opts(hopf, limit_text, format, {"json", "ascii"});
    hopf->callback(
        [&]() { action = [&]() { return cmd_verify_hopf(n, fopts, format, limit_text); }; });
  }

  // render
  auto* render = app.add_subcommand("render", "draw a poset or an arc diagram");
  {
    static std::string poset_file, diagram_file, format = "ascii", limit_text;
    static int extension = 0;
    render->add_option("--poset", poset_file, "poset JSON file (Hasse data)");
    render->add_option("--diagram", diagram_file, "arc diagram JSON file");
    render->add_option("--extension", extension, "index of the linear extension to draw over");
    add_common_opts(render, limit_text, format, {"json", "ascii", "latex"});
    render->callback([&]() {
      action = [&]() { return cmd_render(poset_file, diagram_file, extension, format, limit_text); };
    });
  }

  // hopf product | coproduct | verify | free
  auto* hopf = app.add_subcommand("hopf", "Hopf monoid operations on superclass functions");
  hopf->require_subcommand(1);
  {
    static std::string left_file, right_file, basis = "kappa", format = "json", limit_text;
    static bool functional = false;
    auto* product = hopf->add_subcommand("product", "multiply two vectors");
    product->add_option("--left", left_file, "left factor JSON file")->required();
    product->add_option("--right", right_file, "right factor JSON file")->required();
    product->add_option("--basis", basis, "kappa, p, or chi")
        ->check(CLI::IsMember({"kappa", "p", "chi"}));
    product->add_flag("--functional", functional, "use the inflation route instead of the formula");
    add_common_opts(product, limit_text, format, {"json", "ascii"});
    product->callback([&]() {
      action = [&]() {
        return cmd_hopf_product(left_file, right_file, basis, functional, format, limit_text);
      };
    });
  }
  {
    static std::string input_file, basis = "kappa", format = "json", limit_text;
    static std::vector<std::string> split;
    static bool functional = false;
    auto* coproduct = hopf->add_subcommand("coproduct", "split a vector along a set partition");
    coproduct->add_option("--input", input_file, "vector JSON file")->required();
    coproduct->add_option("--split", split, "comma-separated labels of the left part")
        ->delimiter(',');
    coproduct->add_option("--basis", basis, "kappa, p, or chi")
        ->check(CLI::IsMember({"kappa", "p", "chi"}));
    coproduct->add_flag("--functional", functional,
                        "use the restriction route instead of the formula");
    add_common_opts(coproduct, limit_text, format, {"json", "ascii"});
    coproduct->callback([&]() {
      action = [&]() {
        return cmd_hopf_coproduct(input_file, split, basis, functional, format, limit_text);
      };
    });
  }
  {
    static int n = 0;
    static std::string format = "json", limit_text;
    static FieldOpts fopts;
    auto* hverify = hopf->add_subcommand("verify", "Hopf monoid axioms on ground sets up to n");
    hverify->add_option("--n", n, "ground set size")->required();
    add_field_opts(hverify, fopts);
    add_common_opts(hverify, limit_text, format, {"json", "ascii"});
    hverify->callback(
        [&]() { action = [&]() { return cmd_verify_hopf(n, fopts, format, limit_text); }; });
  }
  {
    static int n = 0;
    static std::string format = "json", limit_text;
    static FieldOpts fopts;
    auto* free_cmd = hopf->add_subcommand("free", "freeness and dimension audit up to n");
    free_cmd->add_option("--n", n, "ground set size")->required();
    add_field_opts(free_cmd, fopts);
    add_common_opts(free_cmd, limit_text, format, {"json", "ascii"});
    free_cmd->callback(
        [&]() { action = [&]() { return cmd_hopf_free(n, fopts, format, limit_text); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const value_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const limit_error& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const check_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
