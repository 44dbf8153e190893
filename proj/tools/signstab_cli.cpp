#include "signstab/io_json.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace signstab;

std::vector<Int> parse_int_csv(const std::string& s) {
  std::vector<Int> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.emplace_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.emplace_back(cur);
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

TropPoint parse_point(const std::string& s, std::size_t n) {
  if (s == "l+") return basepoints(n).first;
  if (s == "l-") return basepoints(n).second;
  TropPoint out;
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      out.push_back(rat_from_string(cur));
      cur.clear();
    }
  };
  for (char c : s) {
    if (c == ',') flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur.push_back(c);
  }
  flush();
  if (out.size() != n) throw std::invalid_argument("point has wrong dimension");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else
    write_text_file(out_path, text);
}

void emit_json(const ordered_json& j, const std::string& out_path) {
  emit(j.dump(2) + "\n", out_path);
}

GrowthSource parse_source(const std::string& s) {
  if (s == "C") return GrowthSource::C;
  if (s == "G") return GrowthSource::G;
  if (s == "F") return GrowthSource::F;
  if (s == "A") return GrowthSource::ASymbolic;
  throw std::invalid_argument("unknown growth source: " + s);
}

std::string report_text(const StabilityReport& rep) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(rep.verdict) << "\n";
  if (!rep.stable_sign.empty()) os << "stable sign: " << sign_string(rep.stable_sign) << "\n";
  if (!rep.stable_sign_minus.empty())
    os << "stable sign (negative side): " << sign_string(rep.stable_sign_minus) << "\n";
  if (rep.stable) {
    os << "lambda: " << format_double15(rep.stable->lambda) << "\n";
    os << "char(E): ";
    for (const Int& c : rep.stable->char_e) os << c.str() << " ";
    os << "\npalindromic: " << (rep.stable->palindromic ? "yes" : "no") << "\n";
  }
  if (rep.verdict == Verdict::sign_stable_on_Omega_can ||
      rep.verdict == Verdict::two_sided_sign_stable) {
    EntropyEstimate est = entropy_bounds(rep);
    if (est.point) os << "entropy: " << format_double15(*est.point) << "\n";
    else
      os << "entropy in [" << format_double15(std::max(est.lower_a, est.lower_x)) << ", "
         << format_double15(est.upper) << "]\n";
  }
  for (const std::string& note : rep.diag.notes) os << "note: " << note << "\n";
  return os.str();
}

void attach_perron(const MutationLoop& loop, StabilityReport& rep) {
  if (rep.verdict == Verdict::sign_stable_on_Omega_can) rep.perron = perron_check(loop, rep);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace signstab;
  CLI::App app{"exact sign-stability toolkit for cluster mutation loops"};
  app.require_subcommand(1);

  std::string seed_path, loop_path, cone_path, out_path, word_csv, a_csv, point_str = "l+";
  std::string method = "auto", format = "json", source_str = "C", sign_str, project;
  int n_max = 4, orbit_cap = 64, steps = 10, n_lo = 0, power = 1;
  std::size_t term_budget = 200000;

  auto* seed_cmd = app.add_subcommand("seed", "seed file operations");
  auto* seed_mutate = seed_cmd->add_subcommand("mutate", "mutate a seed along a word");
  seed_mutate->add_option("--seed", seed_path, "seed JSON file")->required();
  seed_mutate->add_option("--word", word_csv, "comma-separated 1-based indices")->required();
  seed_mutate->add_option("--out", out_path, "output path (default stdout)");

  auto* loop_cmd = app.add_subcommand("loop", "mutation loop operations");
  auto* loop_validate = loop_cmd->add_subcommand("validate", "check loop closure");
  loop_validate->add_option("--loop", loop_path)->required();

  auto* loop_orbit = loop_cmd->add_subcommand("orbit", "tropical orbit export");
  loop_orbit->add_option("--loop", loop_path)->required();
  loop_orbit->add_option("--point", point_str, "start point: CSV rationals, l+ or l-");
  loop_orbit->add_option("--steps", steps, "number of traversals");
  loop_orbit->add_option("--format", format, "csv|json");
  loop_orbit->add_option("--out", out_path);

  auto* loop_check = loop_cmd->add_subcommand("check", "decide sign stability");
  loop_check->add_option("--loop", loop_path)->required();
  loop_check->add_option("--method", method, "inductive|heuristic|two-sided|auto");
  loop_check->add_option("--cone", cone_path, "candidate cone (heuristic)");
  loop_check->add_option("--n-max", n_max);
  loop_check->add_option("--orbit-cap", orbit_cap);
  loop_check->add_option("--format", format, "json|text");
  loop_check->add_option("--out", out_path);

  auto* loop_stable = loop_cmd->add_subcommand("stable", "stable presentation data");
  loop_stable->add_option("--loop", loop_path)->required();
  loop_stable->add_option("--n-max", n_max);
  loop_stable->add_option("--orbit-cap", orbit_cap);
  loop_stable->add_option("--cone", cone_path);
  loop_stable->add_option("--out", out_path);

  auto* loop_entropy = loop_cmd->add_subcommand("entropy", "degree growth slopes");
  loop_entropy->add_option("--loop", loop_path)->required();
  loop_entropy->add_option("--source", source_str, "C|G|F|A");
  loop_entropy->add_option("--n-lo", n_lo);
  loop_entropy->add_option("--n-max", n_max);
  loop_entropy->add_option("--term-budget", term_budget);
  loop_entropy->add_option("--format", format, "csv|json");
  loop_entropy->add_option("--out", out_path);

  auto* fm_cmd = app.add_subcommand("fm", "Fordy-Marsh period-one loops");
  auto* fm_build_cmd = fm_cmd->add_subcommand("build", "loop from a palindromic vector");
  fm_build_cmd->add_option("--a", a_csv, "comma-separated integers")->required();
  fm_build_cmd->add_option("--out", out_path);
  auto* fm_check_cmd = fm_cmd->add_subcommand("check", "stability of the period-one loop");
  fm_check_cmd->add_option("--a", a_csv)->required();
  fm_check_cmd->add_option("--orbit-cap", orbit_cap);
  fm_check_cmd->add_option("--out", out_path);

  auto* cones_cmd = app.add_subcommand("cones", "cone computations");
  auto* cones_export = cones_cmd->add_subcommand("export", "V-representation / plot data");
  cones_export->add_option("--loop", loop_path);
  cones_export->add_option("--sign", sign_str, "sign string, e.g. +-+-+-");
  cones_export->add_option("--power", power, "expand the loop to this power first");
  cones_export->add_option("--cone", cone_path, "or: take an H-representation file");
  cones_export->add_option("--project", project, "stereographic (rank 3 only)");
  cones_export->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (seed_mutate->parsed()) {
      ExchangeMatrix b = seed_from_json(load_json_file(seed_path));
      for (const Int& k : parse_int_csv(word_csv)) {
        long kk = k.convert_to<long>();
        if (kk < 1 || static_cast<std::size_t>(kk) > b.n())
          throw std::invalid_argument("mutation index out of range (1-based)");
        b = mutate_exchange_matrix(b, static_cast<int>(kk - 1));
      }
      emit_json(seed_to_json(b), out_path);
      return 0;
    }
    if (loop_validate->parsed()) {
      MutationLoop loop = loop_from_json(load_json_file(loop_path));
      ordered_json j;
      if (auto mism = validate_loop(loop)) {
        j["valid"] = false;
        j["first_mismatch"] = {{"i", mism->i + 1},
                               {"j", mism->j + 1},
                               {"expected", int_to_json(mism->expected)},
                               {"got", int_to_json(mism->got)}};
        emit_json(j, out_path);
        return 1;
      }
      j["valid"] = true;
      j["fully_mutating"] = loop.fully_mutating();
      emit_json(j, out_path);
      return 0;
    }
    if (loop_orbit->parsed()) {
      MutationLoop loop = loop_from_json(load_json_file(loop_path));
      if (validate_loop(loop)) throw std::invalid_argument("loop does not close");
      TropOrbit orbit = apply_loop_trop(loop, parse_point(point_str, loop.rank()), steps);
      if (format == "csv") emit(orbit_to_csv(orbit), out_path);
      else
        emit_json(orbit_to_json(orbit), out_path);
      return 0;
    }
    if (loop_check->parsed() || loop_stable->parsed()) {
      MutationLoop loop = loop_from_json(load_json_file(loop_path));
      std::optional<Cone> user_cone;
      if (!cone_path.empty()) user_cone = cone_from_json(load_json_file(cone_path));
      StabilityReport rep;
      if (method == "inductive") rep = inductive_check(loop, n_max, orbit_cap);
      else if (method == "two-sided")
        rep = two_sided_check(loop, orbit_cap);
      else if (method == "heuristic") {
        if (!user_cone) throw std::invalid_argument("heuristic method requires --cone");
        rep = heuristic_check(loop, *user_cone, orbit_cap);
      } else if (method == "auto")
        rep = auto_check(loop, n_max, orbit_cap, user_cone);
      else
        throw std::invalid_argument("unknown method: " + method);
      attach_perron(loop, rep);
      if (loop_stable->parsed()) {
        ordered_json j = report_to_json(rep);
        emit_json(j, out_path);
      } else if (format == "text")
        emit(report_text(rep), out_path);
      else
        emit_json(report_to_json(rep), out_path);
      return rep.exit_code();
    }
    if (loop_entropy->parsed()) {
      MutationLoop loop = loop_from_json(load_json_file(loop_path));
      GrowthSource src = parse_source(source_str);
      SymBudget budget;
      budget.max_terms = term_budget;
      SlopeTrace trace;
      try {
        trace = degree_growth_slope(loop, n_lo, n_max, src, budget);
      } catch (const TermBudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
      }
      if (format == "csv") emit(slope_trace_to_csv(trace, n_lo), out_path);
      else
        emit_json(slope_trace_to_json(trace, source_str), out_path);
      return 0;
    }
    if (fm_build_cmd->parsed()) {
      MutationLoop loop = fm_build(FMVector{parse_int_csv(a_csv)});
      emit_json(loop_to_json(loop), out_path);
      return 0;
    }
    if (fm_check_cmd->parsed()) {
      MutationLoop loop = fm_build(FMVector{parse_int_csv(a_csv)});
      StabilityReport rep = fm_stability(FMVector{parse_int_csv(a_csv)}, orbit_cap);
      attach_perron(loop, rep);
      emit_json(report_to_json(rep), out_path);
      return rep.exit_code();
    }
    if (cones_export->parsed()) {
      Cone cone;
      if (!cone_path.empty()) {
        cone = cone_from_json(load_json_file(cone_path));
      } else {
        if (loop_path.empty() || sign_str.empty())
          throw std::invalid_argument("cones export needs either --cone or --loop with --sign");
        MutationLoop loop = loop_from_json(load_json_file(loop_path));
        if (power > 1) loop = expand_loop_power(loop, power);
        cone = sign_cone(loop, parse_sign_string(sign_str));
      }
      if (project == "stereographic") {
        if (cone.ambient_dim() != 3) {
          std::cerr << "stereographic projection is emitted for rank 3 only; writing raw data\n";
          emit_json(cone_to_json(cone), out_path);
        } else
          emit(stereographic_csv(cone), out_path);
      } else
        emit_json(cone_to_json(cone), out_path);
      return 0;
    }
  } catch (const TermBudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand ran\n";
  return 1;
}
