// toric: batch CLI over the ktoric library.
//
// Exit codes: 0 = success / property holds, 1 = checked-false or invalid
// input, 2 = internal or resource error. Standard output is always one
// JSON document; diagnostics go to standard error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ktoric/fan.hpp"
#include "ktoric/gkm.hpp"
#include "ktoric/json_io.hpp"
#include "ktoric/laurent.hpp"
#include "ktoric/limits.hpp"
#include "ktoric/ordinary.hpp"
#include "ktoric/piecewise.hpp"
#include "ktoric/random_suites.hpp"
#include "ktoric/stanley_reisner.hpp"

namespace {

using ktoric::Json;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const std::string& kind, const std::string& message, int code) {
  Json j;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  emit(j);
  return code;
}

ktoric::Fan load_fan(const std::string& path) {
  return ktoric::fan_from_json(ktoric::load_json_file(path));
}

// A validated fan, required before any K-theory operation.
ktoric::Fan load_valid_fan(const std::string& path) {
  ktoric::Fan fan = load_fan(path);
  ktoric::ValidationReport report = ktoric::validate(fan);
  if (!report.ok()) {
    throw ktoric::MalformedInputError("fan fails validation: " +
                                      report.issues.front().detail);
  }
  return fan;
}

Json issues_to_json(const ktoric::ValidationReport& report) {
  Json arr = Json::array();
  for (const auto& issue : report.issues) {
    arr.push_back(Json{{"check", issue.check}, {"detail", issue.detail}});
  }
  return arr;
}

Json rat_to_json(const ktoric::Rat& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return ktoric::Json(boost::multiprecision::numerator(q).str());
  }
  return ktoric::Json(q.str());
}

int cmd_fan_validate(const std::string& fan_path) {
  ktoric::Fan fan = load_fan(fan_path);
  ktoric::ValidationReport report = ktoric::validate(fan);
  Json j;
  j["valid"] = report.ok();
  j["issues"] = issues_to_json(report);
  emit(j);
  return report.ok() ? 0 : 1;
}

int cmd_fan_smooth(const std::string& fan_path) {
  ktoric::Fan fan = load_fan(fan_path);
  ktoric::ValidationReport report = ktoric::validate(fan);
  bool smooth = true;
  for (const auto& issue : report.issues) {
    if (issue.check == "smoothness") smooth = false;
  }
  Json j;
  j["smooth"] = smooth && report.ok();
  j["issues"] = issues_to_json(report);
  emit(j);
  return report.ok() ? 0 : 1;
}

int cmd_fan_limits(const std::string& fan_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  ktoric::LimitsResult result = ktoric::enough_limits(fan);
  Json j;
  j["enough_limits"] = result.enough_limits;
  if (result.witness) {
    Json w = Json::array();
    for (Eigen::Index i = 0; i < result.witness->size(); ++i) {
      w.push_back(rat_to_json((*result.witness)(i)));
    }
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  emit(j);
  return result.enough_limits ? 0 : 1;
}

int cmd_kt_member(const std::string& fan_path, const std::string& elt_path,
                  const std::string& mode_name) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  ktoric::PiecewiseElement elt =
      ktoric::piecewise_from_json(fan, ktoric::load_json_file(elt_path));
  ktoric::CompatMode mode = mode_name == "adjacent"
                                ? ktoric::CompatMode::adjacent_only
                                : ktoric::CompatMode::all_pairs;
  ktoric::CompatResult result = ktoric::check_compatible(fan, elt, mode);
  Json j;
  j["compatible"] = result.ok;
  if (result.ok) {
    j["failing_pair"] = nullptr;
  } else {
    j["failing_pair"] = Json::array({result.a, result.b});
  }
  emit(j);
  return result.ok ? 0 : 1;
}

int cmd_kt_express(const std::string& fan_path, const std::string& elt_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  ktoric::PiecewiseElement elt =
      ktoric::piecewise_from_json(fan, ktoric::load_json_file(elt_path));
  ktoric::CompatResult compat =
      ktoric::check_compatible(fan, elt, ktoric::CompatMode::all_pairs);
  if (!compat.ok) {
    Json j;
    j["compatible"] = false;
    j["failing_pair"] = Json::array({compat.a, compat.b});
    emit(j);
    return 1;
  }
  ktoric::LaurentPoly expr = ktoric::express(fan, elt);
  Json j;
  j["compatible"] = true;
  j["expr"] = ktoric::laurent_to_json(expr);
  emit(j);
  return 0;
}

int cmd_kt_relations(const std::string& fan_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  Json nonfaces = Json::array();
  Json generators = Json::array();
  for (const auto& nf : ktoric::minimal_nonfaces(fan)) {
    nonfaces.push_back(nf);
    generators.push_back(
        ktoric::laurent_to_json(ktoric::nonface_generator(fan, nf)));
  }
  Json j;
  j["nonfaces"] = nonfaces;
  j["generators"] = generators;
  emit(j);
  return 0;
}

int cmd_kt_u_basis(const std::string& fan_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  ktoric::VDeltaResult result = ktoric::v_delta_basis_check(fan);
  Json j;
  j["is_basis"] = result.is_basis;
  j["rank"] = result.rank;
  if (result.is_basis) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < result.change_of_basis.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < result.change_of_basis.cols(); ++c) {
        row.push_back(ktoric::int_to_json(result.change_of_basis(r, c)));
      }
      rows.push_back(row);
    }
    j["change_of_basis"] = rows;
  } else {
    j["change_of_basis"] = nullptr;
  }
  emit(j);
  return result.is_basis ? 0 : 1;
}

int cmd_kt_k0_rank(const std::string& fan_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  ktoric::K0Result result = ktoric::k0_rank_over_Q(fan);
  Json j;
  j["rank"] = result.rank;
  j["enough_limits"] = result.enough_limits;
  j["verified_against_max_cones"] = result.verified_against_max_cones;
  emit(j);
  return 0;
}

int cmd_gkm_export(const std::string& fan_path) {
  ktoric::Fan fan = load_valid_fan(fan_path);
  emit(ktoric::gkm_graph_to_json(ktoric::gkm_from_fan(fan)));
  return 0;
}

int cmd_gkm_member(const std::string& graph_path, const std::string& elt_path) {
  ktoric::GkmGraph graph =
      ktoric::gkm_graph_from_json(ktoric::load_json_file(graph_path));
  ktoric::GkmElement elt = ktoric::gkm_element_from_json(
      ktoric::load_json_file(elt_path), graph.rank);
  if (elt.at_vertex.size() != graph.vertices.size()) {
    throw ktoric::MalformedInputError(
        "element has " + std::to_string(elt.at_vertex.size()) +
        " components for " + std::to_string(graph.vertices.size()) +
        " vertices");
  }
  ktoric::GkmCheck result = ktoric::gkm_member(graph, elt);
  Json j;
  j["member"] = result.member;
  if (result.member) {
    j["failing_edge"] = nullptr;
  } else {
    j["failing_edge"] = result.failing_edge;
  }
  emit(j);
  return result.member ? 0 : 1;
}

Json outcome_to_json(const ktoric::SuiteOutcome& o) {
  return Json{{"instances", o.instances},
              {"failures", o.failures},
              {"contract_failures", o.contract_failures}};
}

int cmd_test_ideals(std::uint64_t seed, long long count) {
  ktoric::SuiteOutcome product =
      ktoric::run_product_factorization_suite(seed, count);
  ktoric::SuiteOutcome intersection =
      ktoric::run_intersection_suite(seed, count);
  Json j;
  j["seed"] = seed;
  j["product_factorization"] = outcome_to_json(product);
  j["intersection"] = outcome_to_json(intersection);
  bool ok = product.ok() && intersection.ok();
  j["ok"] = ok;
  emit(j);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K-theory of smooth toric varieties"};
  app.require_subcommand(1);

  std::string fan_path, elt_path, graph_path;
  std::string mode_name = "all-pairs";
  std::uint64_t seed = ktoric::kDefaultSuiteSeed;
  long long count = 1000;

  auto* fan_cmd = app.add_subcommand("fan", "Fan combinatorics");
  fan_cmd->require_subcommand(1);
  auto* fan_validate = fan_cmd->add_subcommand("validate", "Check fan axioms");
  fan_validate->add_option("fan", fan_path, "fan JSON file")->required();
  auto* fan_smooth = fan_cmd->add_subcommand("smooth", "Check smoothness");
  fan_smooth->add_option("fan", fan_path, "fan JSON file")->required();
  auto* fan_limits =
      fan_cmd->add_subcommand("limits", "Decide the enough-limits property");
  fan_limits->add_option("fan", fan_path, "fan JSON file")->required();

  auto* kt_cmd = app.add_subcommand("kt", "Equivariant K-theory");
  kt_cmd->require_subcommand(1);
  auto* kt_member =
      kt_cmd->add_subcommand("member", "Check tuple compatibility");
  kt_member->add_option("fan", fan_path, "fan JSON file")->required();
  kt_member->add_option("element", elt_path, "piecewise element JSON file")
      ->required();
  kt_member->add_option("--mode", mode_name, "all-pairs | adjacent")
      ->check(CLI::IsMember({"all-pairs", "adjacent"}));
  auto* kt_express = kt_cmd->add_subcommand(
      "express", "Express a compatible tuple in ray variables");
  kt_express->add_option("fan", fan_path, "fan JSON file")->required();
  kt_express->add_option("element", elt_path, "piecewise element JSON file")
      ->required();
  auto* kt_relations =
      kt_cmd->add_subcommand("relations", "Minimal nonface relations");
  kt_relations->add_option("fan", fan_path, "fan JSON file")->required();
  auto* kt_u_basis =
      kt_cmd->add_subcommand("u-basis", "Basis check for the u elements");
  kt_u_basis->add_option("fan", fan_path, "fan JSON file")->required();
  auto* kt_k0 =
      kt_cmd->add_subcommand("k0-rank", "Rational rank of ordinary K0");
  kt_k0->add_option("fan", fan_path, "fan JSON file")->required();

  auto* gkm_cmd = app.add_subcommand("gkm", "GKM moment graphs");
  gkm_cmd->require_subcommand(1);
  auto* gkm_export =
      gkm_cmd->add_subcommand("export", "GKM graph of a complete fan");
  gkm_export->add_option("fan", fan_path, "fan JSON file")->required();
  auto* gkm_member =
      gkm_cmd->add_subcommand("member", "Check the GKM congruences");
  gkm_member->add_option("graph", graph_path, "graph JSON file")->required();
  gkm_member->add_option("element", elt_path, "element JSON file")->required();

  auto* test_cmd = app.add_subcommand("test", "Randomized self-checks");
  test_cmd->require_subcommand(1);
  auto* test_ideals =
      test_cmd->add_subcommand("ideals", "Ideal factorization suites");
  test_ideals->add_option("--seed", seed, "RNG seed");
  test_ideals->add_option("--count", count, "instances per suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*fan_validate) return cmd_fan_validate(fan_path);
    if (*fan_smooth) return cmd_fan_smooth(fan_path);
    if (*fan_limits) return cmd_fan_limits(fan_path);
    if (*kt_member) return cmd_kt_member(fan_path, elt_path, mode_name);
    if (*kt_express) return cmd_kt_express(fan_path, elt_path);
    if (*kt_relations) return cmd_kt_relations(fan_path);
    if (*kt_u_basis) return cmd_kt_u_basis(fan_path);
    if (*kt_k0) return cmd_kt_k0_rank(fan_path);
    if (*gkm_export) return cmd_gkm_export(fan_path);
    if (*gkm_member) return cmd_gkm_member(graph_path, elt_path);
    if (*test_ideals) return cmd_test_ideals(seed, count);
  } catch (const ktoric::MalformedInputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit_error("malformed_input", e.what(), 1);
  } catch (const ktoric::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit_error("resource_limit", e.what(), 2);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit_error("invalid_input", e.what(), 1);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return emit_error("internal", e.what(), 2);
  }
  return emit_error("internal", "unhandled command", 2);
}
