#include "polevo/environment.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "polevo/errors.hpp"
#include "polevo/io.hpp"

namespace polevo {

namespace {

constexpr char kMatrixHeader[] =
    "alpha,mu_c,x0,x_dot0,theta1_0,theta2_0,theta1_dot0,theta2_dot0";

}  // namespace

EnvCondition sample_condition(RngStream& rng) {
  using namespace env_ranges;
  EnvCondition c;
  c.alpha = rng.next_uniform(kAlphaLo, kAlphaHi);
  c.mu_c = rng.next_uniform(kMuCLo, kMuCHi);
  c.x0 = rng.next_uniform(kXLo, kXHi);
  c.x_dot0 = rng.next_uniform(kXDotLo, kXDotHi);
  c.theta1_0 = rng.next_uniform(kThetaLo, kThetaHi);
  c.theta2_0 = rng.next_uniform(kThetaLo, kThetaHi);
  c.theta1_dot0 = rng.next_uniform(kThetaDotLo, kThetaDotHi);
  c.theta2_dot0 = rng.next_uniform(kThetaDotLo, kThetaDotHi);
  return c;
}

EnvMatrix make_matrix(int nt, std::int64_t epoch, const RngStream& env_base) {
  RngStream rng = env_base.derive({static_cast<std::uint64_t>(epoch)});
  EnvMatrix m;
  m.epoch = epoch;
  m.conditions.reserve(static_cast<std::size_t>(nt));
  for (int i = 0; i < nt; ++i) m.conditions.push_back(sample_condition(rng));
  return m;
}

EnvMatrix regenerate_if_due(const EnvMatrix& matrix, int generation,
                            const VariationSchedule& schedule, int nt,
                            const RngStream& env_base) {
  if (generation == 0) return make_matrix(nt, 0, env_base);
  if (schedule.regenerates_at(generation))
    return make_matrix(nt, matrix.epoch + 1, env_base);
  return matrix;
}

EnvMatrix posteval_matrix(std::uint64_t posteval_seed) {
  RngStream base = RngStream(posteval_seed).derive({tag(StreamDomain::kPostEval)});
  EnvMatrix m = make_matrix(1000, 0, base);
  return m;
}

EnvMatrix systematic_grid() {
  constexpr std::array<double, 3> alpha{-0.1385, 0.0, 0.1385};
  constexpr std::array<double, 3> mu_c{-0.15, 0.0, 0.15};
  constexpr std::array<double, 3> x0{-0.75, 0.0, 0.75};
  constexpr std::array<double, 3> x_dot0{-0.6, 0.0, 0.6};
  constexpr std::array<double, 3> theta1{-0.05235, 0.0, 0.05235};
  constexpr std::array<double, 3> theta1_dot{-0.0675, 0.0, 0.0675};

  EnvMatrix m;
  m.epoch = 0;
  m.conditions.reserve(729);
  for (double a : alpha)
    for (double mu : mu_c)
      for (double x : x0)
        for (double xd : x_dot0)
          for (double t1 : theta1)
            for (double t1d : theta1_dot) {
              EnvCondition c;
              c.alpha = a;
              c.mu_c = mu;
              c.x0 = x;
              c.x_dot0 = xd;
              c.theta1_0 = t1;
              c.theta1_dot0 = t1d;
              m.conditions.push_back(c);
            }
  return m;
}

void write_matrix_csv(const EnvMatrix& matrix, std::ostream& out) {
  out << "# epoch: " << matrix.epoch << '\n' << kMatrixHeader << '\n';
  for (const EnvCondition& c : matrix.conditions) {
    out << format_double(c.alpha) << ',' << format_double(c.mu_c) << ','
        << format_double(c.x0) << ',' << format_double(c.x_dot0) << ','
        << format_double(c.theta1_0) << ',' << format_double(c.theta2_0) << ','
        << format_double(c.theta1_dot0) << ',' << format_double(c.theta2_dot0)
        << '\n';
  }
}

EnvMatrix read_matrix_csv(std::istream& in) {
  EnvMatrix m;
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto pos = line.find("epoch:");
      if (pos != std::string::npos)
        m.epoch = std::strtoll(line.c_str() + pos + 6, nullptr, 10);
      continue;
    }
    if (!header_seen) {
      if (line != kMatrixHeader)
        throw MalformedRecord("unexpected matrix header at line " +
                              std::to_string(line_no));
      header_seen = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != 8)
      throw MalformedRecord("expected 8 fields at line " + std::to_string(line_no));
    std::array<double, 8> v{};
    for (int i = 0; i < 8; ++i) {
      const auto& f = fields[i];
      const auto r = std::from_chars(f.data(), f.data() + f.size(), v[i]);
      if (r.ec != std::errc{} || r.ptr != f.data() + f.size())
        throw MalformedRecord("bad number at line " + std::to_string(line_no));
    }
    m.conditions.push_back({v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]});
  }
  return m;
}

}  // namespace polevo
