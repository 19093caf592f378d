#include "tropcount/degrees.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace tropcount {

CoarseDegree::CoarseDegree(std::map<LatticeVec, Integer> values) {
  for (auto& [v, c] : values) {
    if (c < 0) throw std::invalid_argument("coarse-degree values must be nonnegative");
    if (!is_primitive(v)) throw std::invalid_argument("coarse-degree keys must be primitive");
    if (c != 0) values_.emplace(v, c);
  }
}

Integer CoarseDegree::at(const LatticeVec& v) const {
  auto it = values_.find(v);
  return it == values_.end() ? Integer(0) : it->second;
}

Integer CoarseDegree::mass() const {
  Integer m = 0;
  for (const auto& [v, c] : values_) m += c;
  return m;
}

bool CoarseDegree::balanced() const {
  if (values_.empty()) return true;
  LatticeVec s(values_.begin()->first.dim());
  for (const auto& [v, c] : values_) s += c * v;
  return s.is_zero();
}

CoarseDegree coarse_of(const Degree& degree) {
  std::map<LatticeVec, Integer> values;
  for (const auto& e : degree.ends()) values[e.direction] += e.weight;
  return CoarseDegree(std::move(values));
}

namespace {

void partitions(long total, long max_part, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (long p = std::min(total, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(total - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Degree> refine_coarse(const CoarseDegree& coarse, std::optional<Integer> max_weight) {
  std::vector<Degree> out;
  if (coarse.empty()) return out;
  const Integer cap = max_weight.value_or(coarse.mass());
  if (cap <= 0) throw std::invalid_argument("max_weight must be positive");

  std::vector<std::pair<LatticeVec, std::vector<std::vector<long>>>> choices;
  for (const auto& [v, c] : coarse.values()) {
    if (!c.fits_slong_p()) throw std::invalid_argument("coarse-degree value too large to refine");
    std::vector<std::vector<long>> parts;
    std::vector<long> current;
    const long limit = cap.fits_slong_p() ? std::min(cap.get_si(), c.get_si()) : c.get_si();
    partitions(c.get_si(), limit, current, parts);
    choices.emplace_back(v, std::move(parts));
  }

  std::vector<End> ends;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == choices.size()) {
      if (ends.size() >= 2) out.emplace_back(ends);
      return;
    }
    for (const auto& part : choices[k].second) {
      const std::size_t mark = ends.size();
      for (long w : part) ends.push_back(End{choices[k].first, Integer(w)});
      rec(k + 1);
      ends.resize(mark);
    }
  };
  rec(0);
  return out;
}

Integer default_cap(const std::vector<RayConstraint>& constraints, std::size_t rank) {
  Integer s = 0;
  for (const auto& c : constraints) s += abs(c.target);
  return s * static_cast<unsigned long>(rank);
}

DegreeSet enumerate_coarse_degrees(const std::vector<LatticeVec>& rays, const std::vector<RayConstraint>& constraints,
                                   std::optional<Integer> cap) {
  if (rays.empty()) return {};
  const std::size_t n = rays.front().dim();
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!is_primitive(rays[i])) throw std::invalid_argument("rays must be primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (rays[i] == rays[j]) throw std::invalid_argument("rays must be pairwise distinct");
  }
  for (const auto& c : constraints)
    if (c.coeffs.size() != rays.size()) throw std::invalid_argument("constraint length differs from ray count");
  const Integer limit = cap.value_or(default_cap(constraints, n));
  if (!limit.fits_slong_p()) throw std::invalid_argument("cap too large");

  DegreeSet out;
  std::vector<long> counts(rays.size(), 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t r, long remaining) {
    if (r == rays.size()) {
      LatticeVec s(n);
      for (std::size_t k = 0; k < rays.size(); ++k) s += Integer(counts[k]) * rays[k];
      if (!s.is_zero()) return;
      for (const auto& c : constraints) {
        Integer v = 0;
        for (std::size_t k = 0; k < rays.size(); ++k) v += c.coeffs[k] * counts[k];
        if (v != c.target) return;
      }
      std::map<LatticeVec, Integer> values;
      for (std::size_t k = 0; k < rays.size(); ++k) values[rays[k]] = counts[k];
      out.emplace_back(std::move(values));
      return;
    }
    for (long c = 0; c <= remaining; ++c) {
      counts[r] = c;
      rec(r + 1, remaining - c);
    }
    counts[r] = 0;
  };
  rec(0, limit.get_si());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LatticeVec> flag3_rays() {
  return {{-1, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 0, -1}, {0, -1, 0}, {0, -1, 1}};
}

std::vector<RayConstraint> flag3_constraints(const Integer& s, const Integer& t) {
  return {RayConstraint{{1, 0, 0, 0, 0, 0}, s}, RayConstraint{{0, 1, 0, 0, 0, 0}, t}};
}

DegreeSet preset_flag3(const Integer& s, const Integer& t) {
  if (s < 0 || t < 0 || (s == 0 && t == 0)) throw std::invalid_argument("flag class must be nonnegative and nonzero");
  // s1 + s2 = s, t1 + t2 = t, t2 = s2.
  DegreeSet out;
  const auto rays = flag3_rays();
  for (Integer s2 = 0; s2 <= s && s2 <= t; ++s2) {
    std::map<LatticeVec, Integer> v;
    v[rays[0]] = s;
    v[rays[1]] = t;
    v[rays[2]] = s - s2;
    v[rays[3]] = s2;
    v[rays[4]] = t - s2;
    v[rays[5]] = s2;
    out.emplace_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVec> octahedron_rays() {
  return {{0, 1, 1}, {-1, 0, 0}, {0, -1, 0}, {1, 0, 1}, {0, 1, 0}, {-1, 0, -1}, {0, -1, -1}, {1, 0, 0}};
}

std::vector<RayConstraint> octahedron_constraints(const Integer& a) {
  const auto rays = octahedron_rays();
  std::vector<RayConstraint> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == -rays[j]) {
        RayConstraint c{std::vector<Integer>(rays.size()), 0};
        c.coeffs[i] = 1;
        c.coeffs[j] = -1;
        out.push_back(std::move(c));
      }
  out.push_back(RayConstraint{std::vector<Integer>(rays.size(), Integer(1)), 2 * a});
  return out;
}

DegreeSet preset_octahedron(const Integer& a) {
  if (a < 1) throw std::invalid_argument("octahedron class must be positive");
  const std::vector<std::pair<LatticeVec, LatticeVec>> pairs = {
      {{0, 1, 1}, {0, -1, -1}}, {{1, 0, 0}, {-1, 0, 0}}, {{0, 1, 0}, {0, -1, 0}}, {{1, 0, 1}, {-1, 0, -1}}};
  DegreeSet out;
  for (Integer a1 = 0; a1 <= a; ++a1)
    for (Integer a2 = 0; a1 + a2 <= a; ++a2)
      for (Integer a3 = 0; a1 + a2 + a3 <= a; ++a3) {
        Integer parts[4] = {a1, a2, a3, a - a1 - a2 - a3};
        std::map<LatticeVec, Integer> v;
        for (std::size_t k = 0; k < 4; ++k) {
          v[pairs[k].first] = parts[k];
          v[pairs[k].second] = parts[k];
        }
        out.emplace_back(std::move(v));
      }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropcount
