#include "ordvec_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "ordvec/coherence.hpp"
#include "ordvec/error.hpp"
#include "ordvec/functionals.hpp"
#include "ordvec/gallery.hpp"
#include "ordvec/serialize.hpp"
#include "ordvec/suite.hpp"

namespace ordvec::cli {

namespace js = ordvec::json;
using Json = nlohmann::json;

namespace {

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

// "[1, \"-2/3\"]" or "1,-2/3".
RVector parse_vector(const std::string& text, std::size_t dim) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      return js::vector_from_json(Json::parse(text), dim);
    } catch (const Json::parse_error& e) {
      throw InvalidInput(std::string("malformed vector: ") + e.what());
    }
  }
  std::vector<Rational> entries;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) entries.push_back(Rational::parse(item));
  require_dim(entries.size(), dim, "vector");
  return RVector(std::move(entries));
}

std::vector<RVector> pick_vectors(const std::vector<std::string>& given, const std::vector<RVector>& fallback,
                                  std::size_t dim, const char* what) {
  if (given.empty()) {
    if (fallback.empty()) throw InvalidInput(std::string("no ") + what + " given and none in the instance");
    return fallback;
  }
  std::vector<RVector> out;
  for (const auto& g : given) out.push_back(parse_vector(g, dim));
  return out;
}

struct Flags {
  std::string file;
  std::vector<std::string> vectors;
  bool witness = false;
  bool certificate = false;
  bool as_json = false;
};

void emit(std::ostream& out, const Flags& f, const Json& j, const std::string& text) {
  if (f.as_json) {
    out << j.dump(2) << '\n';
  } else {
    out << text;
  }
}

int cmd_norm(const Flags& f, std::ostream& out) {
  js::Instance inst = js::parse_instance(read_text(f.file));
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& v : pick_vectors(f.vectors, inst.vectors, inst.space.dim(), "vector")) {
    NormResult r = norm_p(inst.space, v);
    if (r.attained && !verify_norm_witness(inst.space, v, r)) throw std::logic_error("norm witness failed verification");
    Json j = js::to_json(r, f.witness);
    j["vector"] = js::to_json(v);
    results.push_back(j);
    text << (r.value ? r.value->str() : "infinite");
    if (r.finite() && !r.attained) text << " (not attained)";
    if (f.witness && r.attained) text << "  witness " << r.witness;
    text << '\n';
  }
  emit(out, f, results, text.str());
  return kSuccess;
}

int cmd_member(const Flags& f, std::ostream& out) {
  js::Instance inst = js::parse_instance(read_text(f.file));
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& v : pick_vectors(f.vectors, inst.vectors, inst.space.dim(), "vector")) {
    bool in_k = cone_contains(inst.space.cone(), v);
    bool in_e = in_ideal(inst.space, v);
    results.push_back({{"vector", js::to_json(v)}, {"in_cone", in_k}, {"in_ideal", in_e}});
    text << "cone " << (in_k ? "yes" : "no") << "  ideal " << (in_e ? "yes" : "no") << '\n';
  }
  emit(out, f, results, text.str());
  return kSuccess;
}

int cmd_coherent(const Flags& f, std::ostream& out) {
  js::Instance inst = js::parse_instance(read_text(f.file));
  CoherenceVerdict v = check_coherent(inst.space);
  if (!verify_verdict(inst.space, v)) throw std::logic_error("coherence certificate failed verification");
  Json cert = js::to_json(v, f.certificate);
  if (f.as_json || f.certificate) {
    out << cert.dump(2) << '\n';
  } else if (v.coherent) {
    out << "coherent\nphi " << v.phi << '\n';
  } else {
    out << "incoherent\nwitness " << v.witness << '\n';
  }
  return v.coherent ? kSuccess : kIncoherent;
}

int cmd_opnorm(const Flags& f, std::ostream& out) {
  js::Instance inst = js::parse_instance(read_text(f.file));
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& psi : pick_vectors(f.vectors, inst.functionals, inst.space.dim(), "functional")) {
    Rational op = op_norm(inst.space, psi);
    Rational sup = sup_over_m(psi, inst.space.positive_set());
    results.push_back({{"functional", js::to_json(psi)}, {"op_norm", js::to_json(op)}, {"sup_over_M", js::to_json(sup)}});
    text << op << '\n';
  }
  emit(out, f, results, text.str());
  return kSuccess;
}

int cmd_unitnorm(const Flags& f, const std::string& unit, std::ostream& out) {
  js::Instance inst = js::parse_instance(read_text(f.file));
  RVector u = unit.empty() ? (inst.order_unit ? *inst.order_unit : inst.space.sum_of_m())
                           : parse_vector(unit, inst.space.dim());
  Json results = Json::array();
  std::ostringstream text;
  for (const auto& v : pick_vectors(f.vectors, inst.vectors, inst.space.dim(), "vector")) {
    auto n = order_unit_norm(inst.space.cone(), u, v);
    results.push_back({{"vector", js::to_json(v)}, {"value", n ? js::to_json(*n) : Json("infinite")}});
    text << (n ? n->str() : "infinite") << '\n';
  }
  emit(out, f, results, text.str());
  return kSuccess;
}

int cmd_gallery_list(std::ostream& out) {
  for (const auto& name : gallery_names()) out << name << '\n';
  return kSuccess;
}

int cmd_gallery_emit(const std::string& name, std::ostream& out) {
  GalleryInstance g = make_gallery_instance(name);
  js::Instance inst{g.space, g.vectors, g.functionals, std::nullopt};
  Json j = js::to_json(inst);
  if (!g.labels.empty()) j["labels"] = g.labels;
  out << j.dump(2) << '\n';
  return kSuccess;
}

int cmd_suite(const suite::Options& opts, const std::vector<std::string>& checks, bool as_json, bool list,
              std::ostream& out, std::ostream& err) {
  if (list) {
    for (const auto& c : suite::all_checks()) out << c.name << "  " << c.statement << '\n';
    return kSuccess;
  }
  auto start = std::chrono::steady_clock::now();
  suite::Report rep = suite::run_suite(opts, checks);
  std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
  if (as_json) {
    out << suite::to_json(rep).dump(2) << '\n';
  } else {
    out << suite::render_text(rep);
  }
  err << "suite wall time " << wall.count() << " s\n";
  return rep.passed() ? kSuccess : kPropertyViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in finite-dimensional ordered vector spaces", "ordvec"};
  app.require_subcommand(1);

  Flags f;
  auto add_common = [&](CLI::App* sub, const char* vec_help) {
    sub->add_option("instance", f.file, "instance JSON file, - for stdin")->required();
    sub->add_option("vectors", f.vectors, vec_help);
    sub->add_flag("--json", f.as_json, "machine-readable output");
  };

  auto* norm = app.add_subcommand("norm", "p_M of vectors (defaults to the instance's vectors)");
  add_common(norm, "vectors as 1,-2/3 or JSON arrays");
  norm->add_flag("--witness", f.witness, "print coefficients attaining the value");

  auto* member = app.add_subcommand("member", "membership in the cone and in E_M");
  add_common(member, "vectors as 1,-2/3 or JSON arrays");

  auto* coherent = app.add_subcommand("coherent", "decide coherency; exit 0 coherent, 3 incoherent");
  coherent->add_option("instance", f.file, "instance JSON file, - for stdin")->required();
  coherent->add_flag("--json", f.as_json, "machine-readable output");
  coherent->add_flag("--emit-certificate", f.certificate, "print the certificate JSON with multipliers");

  auto* opnorm = app.add_subcommand("opnorm", "operator norm of functionals on (E_M, p_M)");
  add_common(opnorm, "functionals (defaults to the instance's functionals)");

  std::string unit;
  auto* unitnorm = app.add_subcommand("unitnorm", "order-unit norm ||v||_u");
  add_common(unitnorm, "vectors as 1,-2/3 or JSON arrays");
  unitnorm->add_option("--unit", unit, "order unit (defaults to the instance's order_unit, else the sum of M)");

  auto* gallery = app.add_subcommand("gallery", "named instances");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "list instance names");
  std::string gname;
  auto* gemit = gallery->add_subcommand("emit", "write an instance as JSON");
  gemit->add_option("name", gname, "instance name")->required();

  suite::Options sopts;
  std::vector<std::string> checks;
  std::string mutant = "none";
  bool suite_json = false;
  bool suite_list = false;
  auto* suite_cmd = app.add_subcommand("suite", "run the property suite; exit 1 on any failure");
  suite_cmd->add_option("--seed", sopts.seed, "RNG seed")->capture_default_str();
  suite_cmd->add_option("--max-dim", sopts.bounds.max_dim, "largest ambient dimension")->check(CLI::Range(1, 6))->capture_default_str();
  suite_cmd->add_option("--max-m", sopts.bounds.max_m, "largest |M|")->check(CLI::Range(1, 5))->capture_default_str();
  suite_cmd->add_option("--threads", sopts.threads, "worker threads (0 = all cores)");
  suite_cmd->add_option("--check", checks, "run only the named checks");
  suite_cmd->add_option("--mutant", mutant, "inject a fault: none, flip-witness")
      ->check(CLI::IsMember({"none", "flip-witness"}));
  suite_cmd->add_flag("--json", suite_json, "JSON report");
  suite_cmd->add_flag("--list", suite_list, "list checks and exit");

  try {
    // CLI11 splits "[...]" values on commas; a leading space keeps JSON vectors whole.
    std::vector<std::string> reversed;
    for (auto it = args.rbegin(); it != args.rend(); ++it) reversed.push_back(it->starts_with('[') ? " " + *it : *it);
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) {
      if (sub->get_subcommands().empty()) err << sub->help();
    }
    return kInputError;
  }

  try {
    if (norm->parsed()) return cmd_norm(f, out);
    if (member->parsed()) return cmd_member(f, out);
    if (coherent->parsed()) return cmd_coherent(f, out);
    if (opnorm->parsed()) return cmd_opnorm(f, out);
    if (unitnorm->parsed()) return cmd_unitnorm(f, unit, out);
    if (glist->parsed()) return cmd_gallery_list(out);
    if (gemit->parsed()) return cmd_gallery_emit(gname, out);
    if (suite_cmd->parsed()) {
      sopts.mutant = mutant == "flip-witness" ? suite::Mutant::FlipWitness : suite::Mutant::None;
      return cmd_suite(sopts, checks, suite_json, suite_list, out, err);
    }
  } catch (const InvalidInput& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionViolation& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "verification failure: " << e.what() << '\n';
    return kPropertyViolation;
  }
  return kInputError;
}

}  // namespace ordvec::cli
