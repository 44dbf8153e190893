#include "signstab/io_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace signstab {

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x).str();
  if (denominator(x) != 1) os << "/" << denominator(x).str();
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

static const Int kInt64Max("9223372036854775807");
static const Int kInt64Min("-9223372036854775808");

ordered_json int_to_json(const Int& x) {
  if (x <= kInt64Max && x >= kInt64Min) return ordered_json(x.convert_to<std::int64_t>());
  return ordered_json(x.str());
}

Int int_from_json(const ordered_json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  throw std::invalid_argument("expected an integer or a decimal string");
}

ordered_json matrix_to_json(const IntMat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMat matrix_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: array of rows expected");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].size();
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (j[i].size() != cols) throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j[i][c]);
  }
  return m;
}

ordered_json coeffs_to_json(const std::vector<Int>& coeffs) {
  ordered_json out = ordered_json::array();
  for (const Int& c : coeffs) out.push_back(int_to_json(c));
  return out;
}

ordered_json seed_to_json(const ExchangeMatrix& b) {
  ordered_json j;
  j["n"] = b.n();
  j["b"] = matrix_to_json(b.mat());
  return j;
}

ExchangeMatrix seed_from_json(const ordered_json& j) {
  IntMat b = matrix_from_json(j.at("b"));
  if (j.contains("n") && j.at("n").get<std::size_t>() != b.rows())
    throw std::invalid_argument("seed: field n disagrees with the matrix size");
  return ExchangeMatrix(std::move(b));
}

ordered_json loop_to_json(const MutationLoop& loop) {
  ordered_json j;
  j["b"] = matrix_to_json(loop.b0.mat());
  ordered_json word = ordered_json::array();
  for (int k : loop.word) word.push_back(k + 1);
  j["word"] = std::move(word);
  if (!loop.sigma.is_identity()) {
    ordered_json sigma = ordered_json::array();
    for (int v : loop.sigma.images()) sigma.push_back(v + 1);
    j["sigma"] = std::move(sigma);
  }
  return j;
}

MutationLoop loop_from_json(const ordered_json& j) {
  ExchangeMatrix b(matrix_from_json(j.at("b")));
  std::vector<int> word;
  for (const auto& v : j.at("word")) {
    long k = v.get<long>();
    if (k < 1 || static_cast<std::size_t>(k) > b.n())
      throw std::invalid_argument("loop: word index out of range (1-based)");
    word.push_back(static_cast<int>(k - 1));
  }
  Perm sigma(b.n());
  if (j.contains("sigma")) {
    std::vector<int> images;
    for (const auto& v : j.at("sigma")) {
      long s = v.get<long>();
      if (s < 1 || static_cast<std::size_t>(s) > b.n())
        throw std::invalid_argument("loop: sigma image out of range (1-based)");
      images.push_back(static_cast<int>(s - 1));
    }
    sigma = Perm::from_images(std::move(images));
  }
  return make_loop(std::move(b), std::move(word), std::move(sigma));
}

static ordered_json vectors_to_json(const std::vector<IntVec>& vs) {
  ordered_json out = ordered_json::array();
  for (const IntVec& v : vs) {
    ordered_json row = ordered_json::array();
    for (const Int& x : v) row.push_back(int_to_json(x));
    out.push_back(std::move(row));
  }
  return out;
}

ordered_json cone_to_json(const Cone& c) {
  ordered_json j;
  j["normals"] = vectors_to_json(c.normals());
  j["rays"] = vectors_to_json(c.rays());
  j["lineality"] = vectors_to_json(c.lineality());
  return j;
}

Cone cone_from_json(const ordered_json& j) {
  const ordered_json& normals = j.at("normals");
  if (!normals.is_array() || normals.empty())
    throw std::invalid_argument("cone: nonempty normals array expected");
  std::vector<IntVec> ns;
  const std::size_t dim = normals[0].size();
  for (const auto& row : normals) {
    IntVec v;
    for (const auto& x : row) v.push_back(int_from_json(x));
    if (v.size() != dim) throw std::invalid_argument("cone: ragged normals");
    ns.push_back(std::move(v));
  }
  return Cone::from_normals(dim, std::move(ns));
}

static ordered_json stable_to_json(const StableData& d) {
  ordered_json j;
  j["e_stable"] = matrix_to_json(d.e);
  j["e_check_stable"] = matrix_to_json(d.e_check);
  j["char_e"] = coeffs_to_json(d.char_e);
  j["char_e_check"] = coeffs_to_json(d.char_e_check);
  j["palindromic"] = d.palindromic;
  if (d.palindromic) j["palindrome_sign"] = d.palindrome_sign;
  j["lambda"] = format_double15(d.lambda);
  j["lambda_error_bound"] = format_double15(d.lambda_err);
  j["rho_check"] = format_double15(d.rho_check);
  j["r_phi"] = format_double15(d.r_phi);
  return j;
}

ordered_json report_to_json(const StabilityReport& rep) {
  ordered_json j;
  j["verdict"] = verdict_name(rep.verdict);
  if (!rep.stable_sign.empty()) j["stable_sign"] = sign_string(rep.stable_sign);
  if (!rep.stable_sign_minus.empty()) j["stable_sign_minus"] = sign_string(rep.stable_sign_minus);
  if (rep.n0_plus >= 0) j["n0_plus"] = rep.n0_plus;
  if (rep.n0_minus >= 0) j["n0_minus"] = rep.n0_minus;
  if (rep.stable) j["stable"] = stable_to_json(*rep.stable);
  if (rep.stable_minus) j["stable_minus"] = stable_to_json(*rep.stable_minus);
  if (rep.perron) {
    ordered_json p;
    p["lambda"] = format_double15(rep.perron->lambda);
    ordered_json v = ordered_json::array();
    for (double x : rep.perron->v) v.push_back(format_double15(x));
    p["vector"] = std::move(v);
    p["residual"] = format_double15(rep.perron->residual);
    p["converged"] = rep.perron->converged;
    p["in_stable_sign_cone"] = rep.perron->in_sign_cone;
    p["in_stable_cone_depth"] = rep.perron->stab_depth;
    p["in_stable_cone"] = rep.perron->in_stab_cone;
    j["perron"] = std::move(p);
  }
  if (rep.verdict == Verdict::sign_stable_on_Omega_can ||
      rep.verdict == Verdict::two_sided_sign_stable) {
    EntropyEstimate est = entropy_bounds(rep);
    j["entropy"] = entropy_to_json(est);
  }
  ordered_json diag;
  diag["method"] = rep.diag.method;
  if (!rep.diag.full_dim_cone_counts.empty()) {
    ordered_json counts = ordered_json::array();
    for (auto [n, c] : rep.diag.full_dim_cone_counts) {
      ordered_json e;
      e["n"] = n;
      e["full_dimensional_cones"] = c;
      counts.push_back(std::move(e));
    }
    diag["full_dimensional_cone_counts"] = std::move(counts);
  }
  if (rep.diag.strict_interior_n0 >= 0 || rep.diag.strict_interior) {
    diag["strict_interior"] = rep.diag.strict_interior;
    if (rep.diag.strict_interior_n0 >= 0) diag["strict_interior_power"] = rep.diag.strict_interior_n0;
  }
  if (!rep.diag.notes.empty()) diag["notes"] = rep.diag.notes;
  j["diagnostics"] = std::move(diag);
  return j;
}

ordered_json entropy_to_json(const EntropyEstimate& est) {
  ordered_json j;
  j["lower_a"] = format_double15(est.lower_a);
  j["lower_x"] = format_double15(est.lower_x);
  j["upper"] = format_double15(est.upper);
  if (est.point) j["point"] = format_double15(*est.point);
  else
    j["point"] = nullptr;
  return j;
}

ordered_json slope_trace_to_json(const SlopeTrace& t, const std::string& source) {
  ordered_json j;
  j["source"] = source;
  ordered_json slopes = ordered_json::array();
  for (double s : t.slopes) slopes.push_back(format_double15(s));
  j["slopes"] = std::move(slopes);
  j["tail_mean"] = format_double15(t.tail_mean);
  return j;
}

std::string orbit_to_csv(const TropOrbit& orbit) {
  std::ostringstream os;
  const std::size_t n = orbit.points.empty() ? 0 : orbit.points[0].size();
  os << "step";
  for (std::size_t i = 1; i <= n; ++i) os << ",x_" << i;
  os << ",signs\n";
  for (std::size_t s = 0; s < orbit.points.size(); ++s) {
    os << s;
    for (const Rat& x : orbit.points[s]) os << "," << rat_to_string(x);
    os << ",";
    if (s > 0) os << sign_string(orbit.signs[s - 1]);
    os << "\n";
  }
  return os.str();
}

ordered_json orbit_to_json(const TropOrbit& orbit) {
  ordered_json j;
  ordered_json points = ordered_json::array();
  for (const TropPoint& p : orbit.points) {
    ordered_json row = ordered_json::array();
    for (const Rat& x : p) row.push_back(rat_to_string(x));
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  ordered_json signs = ordered_json::array();
  for (const SignVec& s : orbit.signs) signs.push_back(sign_string(s));
  j["signs"] = std::move(signs);
  return j;
}

std::string slope_trace_to_csv(const SlopeTrace& t, int n_lo) {
  std::ostringstream os;
  os << "n,slope\n";
  for (std::size_t i = 0; i < t.slopes.size(); ++i)
    os << (n_lo + static_cast<int>(i)) << "," << format_double15(t.slopes[i]) << "\n";
  os << "tail_mean," << format_double15(t.tail_mean) << "\n";
  return os.str();
}

std::string stereographic_csv(const Cone& c, int samples_per_arc) {
  if (c.ambient_dim() != 3)
    throw std::invalid_argument("stereographic export is defined for rank 3 only");
  // projection point p = (1,1,1)/sqrt(3); plane basis orthogonal to p
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  const double p[3] = {1 / s3, 1 / s3, 1 / s3};
  const double u[3] = {1 / s2, -1 / s2, 0};
  const double v[3] = {1 / s6, 1 / s6, -2 / s6};
  std::ostringstream os;
  os << "arc,t,u,v\n";
  const auto& rays = c.rays();
  int arc_id = 0;
  for (const IntVec& normal : c.normals()) {
    // boundary arc of each facet: the two extreme rays tight on it
    std::vector<const IntVec*> tight;
    for (const IntVec& r : rays)
      if (dot(normal, r) == 0) tight.push_back(&r);
    if (tight.size() != 2) continue;
    double r1[3], r2[3];
    for (int i = 0; i < 3; ++i) {
      r1[i] = (*tight[0])[static_cast<std::size_t>(i)].convert_to<double>();
      r2[i] = (*tight[1])[static_cast<std::size_t>(i)].convert_to<double>();
    }
    auto normalize = [](double* x) {
      double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
      for (int i = 0; i < 3; ++i) x[i] /= n;
    };
    normalize(r1);
    normalize(r2);
    for (int s = 0; s <= samples_per_arc; ++s) {
      double t = static_cast<double>(s) / samples_per_arc;
      double q[3];
      for (int i = 0; i < 3; ++i) q[i] = (1 - t) * r1[i] + t * r2[i];
      normalize(q);
      double qp = q[0] * p[0] + q[1] * p[1] + q[2] * p[2];
      if (std::abs(1 - qp) < 1e-9) continue;  // projection pole
      double proj[3];
      for (int i = 0; i < 3; ++i) proj[i] = (q[i] - qp * p[i]) / (1 - qp);
      double cu = proj[0] * u[0] + proj[1] * u[1] + proj[2] * u[2];
      double cv = proj[0] * v[0] + proj[1] * v[1] + proj[2] * v[2];
      os << arc_id << "," << format_double15(t) << "," << format_double15(cu) << ","
         << format_double15(cv) << "\n";
    }
    ++arc_id;
  }
  return os.str();
}

ordered_json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
}

}  // namespace signstab
