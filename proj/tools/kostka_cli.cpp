// kostka: extremal rays and intersection polytopes of Kostka cones.
//
//   kostka rays     --type C --rank 4 [--node 3] [--format json|tsv|pretty]
//   kostka vertices --type C --rank 2 --lambda 1,1 [--format ...] [--oracle]
//   kostka check    --type A --rank 1 --lambda 2 --mu 0 [--oracle]
//   kostka census   [--max-rank 8] [--format ...]
//
// Exit codes: 0 success / member, 1 negative verdict, 2 usage or domain error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kostka/format.hpp"
#include "kostka/kostka.hpp"

namespace {

using namespace kostka;
namespace fmt = kostka::format;

enum class Format { Json, Tsv, Pretty };

struct Options {
  std::string type;
  int rank = 0;
  std::optional<int> node;
  std::string lambda;
  std::string mu;
  std::string format = "pretty";
  std::uint64_t max_weyl_order = OrbitBudget{}.max_group_order;
  bool oracle = false;
  int max_rank = 8;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  if (s == "pretty") return Format::Pretty;
  throw UsageError("unknown format '" + s + "'");
}

RootDatum datum_from(const Options& o) {
  if (o.type.size() != 1) throw UsageError("--type must be a single letter A..G");
  return RootDatum::build(letter_from_char(o.type[0]), o.rank);
}

WeightFW parse_weight(const std::string& csv, const RootDatum& d, const char* what) {
  if (csv.empty()) throw UsageError(std::string("missing --") + what);
  WeightFW w;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) w.coords.push_back(Rational::parse(item));
  if (w.size() != d.size())
    throw UsageError(std::string("--") + what + " needs " + std::to_string(d.rank()) + " coordinates");
  return w;
}

int cmd_rays(const Options& o) {
  const RootDatum d = datum_from(o);
  const Format f = parse_format(o.format);
  const auto rays = o.node ? rays_for_node(d, *o.node) : all_rays(d);
  if (f == Format::Tsv) std::cout << fmt::ray_tsv_header();
  for (const auto& r : rays) {
    switch (f) {
      case Format::Json: std::cout << fmt::ray_json(d, r).dump() << '\n'; break;
      case Format::Tsv: std::cout << fmt::ray_tsv(d, r); break;
      case Format::Pretty: std::cout << "node " << r.node << "  " << fmt::ray_pretty(d, r); break;
    }
  }
  return 0;
}

int cmd_vertices(const Options& o) {
  const RootDatum d = datum_from(o);
  const Format f = parse_format(o.format);
  const WeightFW lambda = parse_weight(o.lambda, d, "lambda");
  if (!lambda.dominant()) throw NotDominant();
  const auto verts = ip_vertices(d, lambda);
  int status = 0;
  if (o.oracle) {
    const OrbitBudget budget{o.max_weyl_order * 10, o.max_weyl_order};
    for (const auto& v : verts)
      if (average_over_parabolic(d, lambda, v.defining_I, budget) != v.point) status = 1;
  }
  if (f == Format::Tsv) std::cout << fmt::vertex_tsv_header();
  for (const auto& v : verts) {
    switch (f) {
      case Format::Json: std::cout << fmt::vertex_json(d, lambda, v).dump() << '\n'; break;
      case Format::Tsv: std::cout << fmt::vertex_tsv(d, lambda, v); break;
      case Format::Pretty: std::cout << fmt::vertex_pretty(d, lambda, v); break;
    }
  }
  if (o.oracle) std::cerr << (status == 0 ? "averaging oracle: agree\n" : "averaging oracle: MISMATCH\n");
  return status;
}

int cmd_check(const Options& o) {
  const RootDatum d = datum_from(o);
  const Format f = parse_format(o.format);
  const WeightFW lambda = parse_weight(o.lambda, d, "lambda");
  const WeightFW mu = parse_weight(o.mu, d, "mu");
  const bool member = steinberg_member(d, lambda, mu);
  const bool extremal = member && verify_extremal(d, lambda, mu);
  const RootCoords c = fw_to_alpha(d, lambda - mu);

  std::optional<oracle::Agreement> cross;
  const bool integral_pair = lambda.integral() && mu.integral() && lambda.dominant() && mu.dominant();
  if (o.oracle && integral_pair && c.integral()) cross = oracle::steinberg_vs_freudenthal(d, lambda, mu);

  if (f == Format::Json) {
    fmt::json j{{"type", std::string(1, to_char(d.letter()))},
                {"rank", d.rank()},
                {"lambda_fw", fmt::rationals(lambda.coords)},
                {"mu_fw", fmt::rationals(mu.coords)},
                {"c_alpha", fmt::rationals(c.coords)},
                {"member", member},
                {"extremal", extremal}};
    if (cross) j["multiplicity"] = cross->multiplicity, j["oracle_agrees"] = cross->agree;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (member ? "member" : "not member");
    if (member) std::cout << (extremal ? ", extremal" : ", not extremal");
    std::cout << '\n';
    std::cout << "lambda - mu = " << fmt::combination(c.coords, "α") << '\n';
    if (cross)
      std::cout << "weight multiplicity " << cross->multiplicity << (cross->agree ? " (agrees)" : " (MISMATCH)") << '\n';
    else if (o.oracle)
      std::cout << "weight multiplicity not applicable (pair not integral or lambda - mu outside the root lattice)\n";
  }
  if (cross && !cross->agree) return 2;
  return member ? 0 : 1;
}

struct CensusRow {
  Letter letter;
  int rank;
};

std::vector<CensusRow> census_rows(int max_rank) {
  std::vector<CensusRow> rows;
  for (Letter l : {Letter::A, Letter::B, Letter::C, Letter::D, Letter::E, Letter::F, Letter::G})
    for (int r = 1; r <= max_rank; ++r)
      if (rank_supported(l, r)) rows.push_back({l, r});
  return rows;
}

int cmd_census(const Options& o) {
  const Format f = parse_format(o.format);
  int max_rank = o.max_rank;
  if (const char* env = std::getenv("KOSTKA_MAX_RANK")) {
    try {
      max_rank = std::min(max_rank, std::stoi(env));
    } catch (const std::exception&) {
      throw UsageError("KOSTKA_MAX_RANK must be an integer");
    }
  }
  if (max_rank < 1 || max_rank > 31) throw UsageError("--max-rank must be in 1..31");
  bool all_match = true;
  if (f == Format::Tsv) std::cout << "type\trank\tenumerated\tformula\tmatch\n";
  for (const auto& row : census_rows(max_rank)) {
    const RootDatum d = RootDatum::build(row.letter, row.rank);
    const std::size_t enumerated = all_rays(d).size();
    const std::uint64_t formula = count_rays_formula(row.letter, row.rank);
    const bool match = enumerated == formula;
    all_match = all_match && match;
    switch (f) {
      case Format::Json:
        std::cout << fmt::json{{"type", std::string(1, to_char(row.letter))},
                               {"rank", row.rank},
                               {"enumerated", enumerated},
                               {"formula", formula},
                               {"match", match}}
                         .dump()
                  << '\n';
        break;
      case Format::Tsv:
        std::cout << to_char(row.letter) << '\t' << row.rank << '\t' << enumerated << '\t' << formula << '\t'
                  << (match ? "yes" : "no") << '\n';
        break;
      case Format::Pretty:
        std::cout << d.name() << (d.name().size() < 3 ? "  " : " ") << enumerated << " rays, formula " << formula
                  << (match ? "  ok" : "  MISMATCH") << '\n';
        break;
    }
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal rays and intersection polytopes of Kostka cones"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--type", o.type, "Simple type letter A..G")->required();
    sub->add_option("--rank", o.rank, "Rank")->required();
    sub->add_option("--format", o.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  };

  auto* rays = app.add_subcommand("rays", "List extremal rays of the Kostka cone");
  add_common(rays);
  rays->add_option("--node", o.node, "Only rays with first coordinate the given fundamental weight");

  auto* vertices = app.add_subcommand("vertices", "List vertices of the intersection polytope IP_lambda");
  add_common(vertices);
  vertices->add_option("--lambda", o.lambda, "Dominant weight, comma-separated fundamental-weight coordinates")
      ->required();
  vertices->add_flag("--oracle", o.oracle, "Cross-check every vertex against the parabolic Weyl average");
  vertices->add_option("--max-weyl-order", o.max_weyl_order, "Largest parabolic subgroup order to enumerate");

  auto* check = app.add_subcommand("check", "Test membership and extremality of (lambda, mu)");
  add_common(check);
  check->add_option("--lambda", o.lambda, "Weight, comma-separated fundamental-weight coordinates")->required();
  check->add_option("--mu", o.mu, "Weight, comma-separated fundamental-weight coordinates")->required();
  check->add_flag("--oracle", o.oracle, "Cross-check with the weight multiplicity of mu in V_lambda");

  auto* census = app.add_subcommand("census", "Compare enumerated ray counts with the counting polynomials");
  census->add_option("--max-rank", o.max_rank, "Largest rank to include (capped by KOSTKA_MAX_RANK)");
  census->add_option("--format", o.format, "json, tsv or pretty")->check(CLI::IsMember({"json", "tsv", "pretty"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*rays) return cmd_rays(o);
    if (*vertices) return cmd_vertices(o);
    if (*check) return cmd_check(o);
    if (*census) return cmd_census(o);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
