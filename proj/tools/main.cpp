#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "istone/catalog.hpp"
#include "istone/completions.hpp"
#include "istone/coverage.hpp"
#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/groupoid.hpp"
#include "istone/patch.hpp"
#include "istone/verify.hpp"

namespace {

using istone::InverseSemigroup;
using nlohmann::json;

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw istone::Error("Malformed", "cannot write " + path);
  out << text;
}

std::string flag(bool b) { return b ? "yes" : "no"; }

int cmd_analyze(const std::string& input, bool as_json) {
  InverseSemigroup S = istone::catalog::load(input);
  const auto& c = S.classify();
  if (as_json) {
    json j{{"n", S.size()},
           {"distributive", c.is_distributive},
           {"boolean", c.is_boolean},
           {"meet_semigroup", c.is_meet_semigroup},
           {"boolean_meet_semigroup", c.is_boolean_meet_semigroup},
           {"idempotents", c.idempotents}};
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "elements:            " << S.size() << "\n"
            << "idempotents:         " << c.idempotents.size() << "\n"
            << "distributive:        " << flag(c.is_distributive) << "\n"
            << "boolean:             " << flag(c.is_boolean) << "\n"
            << "meet semigroup:      " << flag(c.is_meet_semigroup) << "\n"
            << "boolean ^-semigroup: " << flag(c.is_boolean_meet_semigroup)
            << "\n";
  return 0;
}

int cmd_filters(const std::string& input, bool as_json) {
  InverseSemigroup S = istone::catalog::load(input);
  json rows = json::array();
  for (istone::Filter F : istone::all_filters(S)) {
    rows.push_back({{"base", F.base},
                    {"name", S.name(F.base)},
                    {"prime", istone::is_prime_filter(S, F)},
                    {"ultra", istone::is_ultrafilter(S, F)},
                    {"tight", istone::is_tight_filter(S, F)},
                    {"idempotent", istone::is_idempotent_filter(S, F)},
                    {"d", S.d(F.base)},
                    {"r", S.r(F.base)}});
  }
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << "base\tprime\tultra\ttight\tidem\n";
  for (const auto& r : rows) {
    std::cout << r["name"].get<std::string>() << "\t" << flag(r["prime"])
              << "\t" << flag(r["ultra"]) << "\t" << flag(r["tight"]) << "\t"
              << flag(r["idempotent"]) << "\n";
  }
  return 0;
}

istone::Groupoid build_groupoid(const std::string& kind,
                                const InverseSemigroup& S, bool patch) {
  if (kind == "plain") {
    if (patch) throw istone::Error("Usage", "--patch on plain is 'universal'");
    return istone::filter_groupoid(S);
  }
  if (kind == "prime") {
    return patch ? istone::patch_spectrum(S) : istone::prime_spectrum(S);
  }
  if (kind == "tight") {
    if (patch) throw istone::Error("Usage", "--patch on tight is 'exel'");
    return istone::tight_spectrum(S);
  }
  if (kind == "universal") return istone::universal_groupoid(S);
  if (kind == "exel") return istone::exel_tight_groupoid(S);
  throw istone::Error("Usage", "unknown groupoid kind: " + kind);
}

int cmd_groupoid(const std::string& kind, const std::string& input, bool patch,
                 const std::string& export_format, const std::string& outfile) {
  InverseSemigroup S = istone::catalog::load(input);
  istone::Groupoid G = build_groupoid(kind, S, patch);
  if (export_format == "dot") {
    write_out(istone::to_dot(G), outfile);
    return 0;
  }
  if (export_format == "json") {
    write_out(istone::to_json(G), outfile);
    return 0;
  }
  int identities = 0;
  for (char b : G.identity) identities += b;
  std::cout << "arrows:      " << G.arrow_count() << "\n"
            << "identities:  " << identities << "\n"
            << "discrete:    " << flag(G.topology.is_discrete()) << "\n";
  return 0;
}

int cmd_complete(const std::string& kind, const std::string& input,
                 bool as_json, const std::string& outfile) {
  InverseSemigroup S = istone::catalog::load(input);
  istone::Completion C;
  if (kind == "D") {
    C = istone::distributive_completion(S);
  } else if (kind == "idl") {
    C = istone::idl_completion(S);
  } else if (kind == "tight") {
    C = istone::tight_completion(S);
  } else {
    throw istone::Error("Usage", "unknown completion kind: " + kind);
  }

  json sidecar = json::array();
  const InverseSemigroup& base = C.quotient ? C.quotient->sgp : S;
  for (const auto& ideal : C.elements) {
    json gens = json::array();
    for (int g : ideal.generators) gens.push_back(base.name(g));
    sidecar.push_back(gens);
  }
  if (as_json) {
    json j = json::parse(istone::catalog::serialize_json(C.sgp));
    j["elements"] = sidecar;
    j["embedding"] = C.embed;
    write_out(j.dump(2), outfile);
    return 0;
  }
  std::string text = istone::catalog::serialize_text(C.sgp);
  text += "# sidecar: generator antichains per element\n";
  for (std::size_t i = 0; i < sidecar.size(); ++i) {
    text += "# " + std::to_string(i) + " = " + sidecar[i].dump() + "\n";
  }
  write_out(text, outfile);
  return 0;
}

int cmd_booleanize(const std::string& input, bool as_json,
                   const std::string& outfile, int max_opens) {
  InverseSemigroup S = istone::catalog::load(input);
  istone::Booleanization B = istone::booleanize(S, max_opens);
  if (as_json) {
    json j = json::parse(istone::catalog::serialize_json(B.kb.sgp));
    j["beta"] = B.beta;
    write_out(j.dump(2), outfile);
    return 0;
  }
  std::string text = istone::catalog::serialize_text(B.kb.sgp);
  text += "# beta: ";
  for (int s = 0; s < S.size(); ++s) {
    text += S.name(s) + "->" + std::to_string(B.beta[s]) + " ";
  }
  text += "\n";
  write_out(text, outfile);
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& input,
               int cover_size, bool with_oracle, bool as_json) {
  InverseSemigroup S = istone::catalog::load(input);
  std::vector<std::string> names;
  if (suite == "all") {
    names = {"duality",        "filters", "completion",      "paterson",
             "booleanization", "tight",   "coverage-axioms", "nucleus"};
    if (with_oracle) names.push_back("oracle");
  } else {
    names = {suite};
  }
  bool all_pass = true;
  json report = json::array();
  for (const auto& name : names) {
    for (const auto& c : istone::verify::suite(name, S, cover_size)) {
      all_pass &= c.pass;
      report.push_back({{"suite", name},
                        {"check", c.name},
                        {"pass", c.pass},
                        {"detail", c.detail}});
      if (!as_json) {
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << name << "/"
                  << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
      }
    }
  }
  if (as_json) std::cout << report.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "istone: finite inverse semigroups with zero, their filters, "
      "completions, and filter groupoids"};
  app.require_subcommand(1);

  std::string input, outfile, export_format, kind = "prime", suite;
  bool as_json = false, patch = false, with_oracle = false;
  int cover_size = 3;
  int max_opens = 20000;

  auto* analyze = app.add_subcommand("analyze", "classify a semigroup");
  analyze->add_option("input", input)->required();
  analyze->add_flag("--json", as_json);

  auto* filters = app.add_subcommand("filters", "list and classify filters");
  filters->add_option("input", input)->required();
  filters->add_flag("--json", as_json);

  auto* groupoid = app.add_subcommand(
      "groupoid", "build a filter groupoid (plain|prime|tight|universal|exel)");
  groupoid->add_option("kind", kind)->required();
  groupoid->add_option("--input", input)->required();
  groupoid->add_flag("--patch", patch);
  groupoid->add_option("--export", export_format)
      ->check(CLI::IsMember({"dot", "json"}));
  groupoid->add_option("-o,--output", outfile);

  auto* complete =
      app.add_subcommand("complete", "build a completion (D|idl|tight)");
  complete->add_option("kind", kind)->required();
  complete->add_option("--input", input)->required();
  complete->add_flag("--json", as_json);
  complete->add_option("-o,--output", outfile);

  auto* booleanize = app.add_subcommand("booleanize", "build B(S)");
  booleanize->add_option("input", input)->required();
  booleanize->add_flag("--json", as_json);
  booleanize->add_option("--max-opens", max_opens,
                         "bound on the open-bisection count");
  booleanize->add_option("-o,--output", outfile);

  auto* verify = app.add_subcommand(
      "verify",
      "run a verification suite (duality|filters|completion|paterson|"
      "booleanization|tight|coverage-axioms|nucleus|oracle|all)");
  verify->add_option("suite", suite)->required();
  verify->add_option("--input", input)->required();
  verify->add_option("--cover-size", cover_size);
  verify->add_flag("--oracle", with_oracle);
  verify->add_flag("--json", as_json);

  auto* exp = app.add_subcommand("export", "export a groupoid (dot|json)");
  exp->add_option("format", export_format)
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--input", input)->required();
  exp->add_option("--kind", kind);
  exp->add_flag("--patch", patch);
  exp->add_option("-o,--output", outfile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(input, as_json);
    if (filters->parsed()) return cmd_filters(input, as_json);
    if (groupoid->parsed()) {
      return cmd_groupoid(kind, input, patch, export_format, outfile);
    }
    if (complete->parsed()) return cmd_complete(kind, input, as_json, outfile);
    if (booleanize->parsed()) {
      return cmd_booleanize(input, as_json, outfile, max_opens);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, input, cover_size, with_oracle, as_json);
    }
    if (exp->parsed()) {
      return cmd_groupoid(kind, input, patch, export_format, outfile);
    }
  } catch (const istone::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "Usage" || e.code() == "Unsupported" ||
                   e.code() == "Malformed"
               ? 2
               : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
