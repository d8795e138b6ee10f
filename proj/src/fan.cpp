#include "blowup/fan.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "blowup/linalg.hpp"

namespace blowup {

namespace {

using Mask = std::uint64_t;

Mask to_mask(const std::vector<std::size_t>& set) {
  Mask m = 0;
  for (auto i : set)
    m |= Mask{1} << i;
  return m;
}

std::vector<std::size_t> from_mask(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1)
      out.push_back(i);
  return out;
}

linalg::Matrix ray_matrix(const Fan& f, const std::vector<std::size_t>& rows) {
  linalg::Matrix m;
  for (auto r : rows)
    m.emplace_back(f.rays[r].begin(), f.rays[r].end());
  return m;
}

// Character m with <m, u_rho> = diff_rho for all rays, if one exists in Z^n.
bool is_principal(const Fan& f, const std::vector<std::int64_t>& diff) {
  std::vector<std::size_t> all(f.num_rays());
  std::iota(all.begin(), all.end(), 0);
  auto sol = linalg::solve(ray_matrix(f, all), linalg::Vector(diff.begin(), diff.end()));
  if (!sol)
    return false;
  // A full-rank ray matrix pins m down uniquely.
  return std::all_of(sol->begin(), sol->end(), [](const Rational& x) { return x.is_integer(); });
}

std::vector<std::int64_t> class_relation(const Fan& f, std::size_t lhs,
                                         std::initializer_list<std::size_t> rhs) {
  std::vector<std::int64_t> diff(f.num_rays(), 0);
  diff[lhs] += 1;
  for (auto r : rhs)
    diff[r] -= 1;
  return diff;
}

// Partitions rays by primitive-collection membership, checks the 5-cycle and
// picks the first cyclic labelling with |X_1| = n-1 for which
// D_z = D_t + D_y and D_v = D_u + D_y hold.
void assign_labels(Fan& f) {
  auto pcs = primitive_collections(f);
  if (pcs.size() != 5)
    throw std::logic_error("expected 5 primitive collections, found " + std::to_string(pcs.size()));

  std::map<Mask, std::vector<std::size_t>> by_signature;
  for (std::size_t r = 0; r < f.num_rays(); ++r) {
    Mask sig = 0;
    for (std::size_t p = 0; p < pcs.size(); ++p)
      if (std::find(pcs[p].begin(), pcs[p].end(), r) != pcs[p].end())
        sig |= Mask{1} << p;
    if (std::popcount(sig) != 2)
      throw std::logic_error("ray not in exactly two primitive collections");
    by_signature[sig].push_back(r);
  }
  if (by_signature.size() != 5)
    throw std::logic_error("primitive collections do not induce 5 ray classes");
  std::vector<std::vector<std::size_t>> classes;
  std::vector<Mask> sigs;
  for (auto& [sig, rays] : by_signature) {
    sigs.push_back(sig);
    classes.push_back(rays);
  }

  // Classes are adjacent when they share a primitive collection.
  auto adjacent = [&](std::size_t i, std::size_t j) { return (sigs[i] & sigs[j]) != 0; };
  std::vector<std::size_t> cycle{0};
  std::vector<bool> used(5, false);
  used[0] = true;
  while (cycle.size() < 5) {
    bool advanced = false;
    for (std::size_t j = 0; j < 5 && !advanced; ++j)
      if (!used[j] && adjacent(cycle.back(), j)) {
        cycle.push_back(j);
        used[j] = true;
        advanced = true;
      }
    if (!advanced)
      throw std::logic_error("primitive collections do not form a 5-cycle");
  }
  if (!adjacent(cycle.back(), cycle.front()))
    throw std::logic_error("primitive collections do not form a 5-cycle");
  for (std::size_t p = 0; p < pcs.size(); ++p) {
    Mask covered = 0;
    for (std::size_t i = 0; i < 5; ++i)
      if (sigs[i] >> p & 1)
        covered |= to_mask(classes[i]);
    if (covered != to_mask(pcs[p]))
      throw std::logic_error("primitive collection is not a union of two classes");
  }

  const auto expected_y = static_cast<std::size_t>(f.dim - 1);
  for (int dir : {1, -1}) {
    for (std::size_t start = 0; start < 5; ++start) {
      std::array<std::size_t, 5> order{};
      for (int k = 0; k < 5; ++k)
        order[static_cast<std::size_t>(k)] =
            cycle[static_cast<std::size_t>(((static_cast<int>(start) + dir * k) % 5 + 5) % 5)];
      if (classes[order[1]].size() != expected_y)
        continue;
      auto rep = [&](int k) { return classes[order[static_cast<std::size_t>(k)]].front(); };
      bool ok = is_principal(f, class_relation(f, rep(2), {rep(3), rep(1)})) &&
                is_principal(f, class_relation(f, rep(0), {rep(4), rep(1)}));
      if (!ok)
        continue;
      f.labels.assign(f.num_rays(), {});
      for (int k = 0; k < 5; ++k) {
        const auto& members = classes[order[static_cast<std::size_t>(k)]];
        for (std::size_t j = 0; j < members.size(); ++j)
          f.labels[members[j]] = {static_cast<RayClass>(k), j, members[j]};
      }
      return;
    }
  }
  throw std::logic_error("no labelling satisfies the class relations");
}

} // namespace

const char* class_name(RayClass c) {
  switch (c) {
  case RayClass::V:
    return "v";
  case RayClass::Y:
    return "y";
  case RayClass::Z:
    return "z";
  case RayClass::T:
    return "t";
  case RayClass::U:
    return "u";
  }
  return "?";
}

std::vector<std::size_t> Fan::rays_of(RayClass c) const {
  std::vector<std::size_t> out;
  for (const auto& l : labels)
    if (l.label == c)
      out.push_back(l.ray_index);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Fan::representative(RayClass c) const {
  auto rays = rays_of(c);
  if (rays.empty())
    throw std::logic_error("fan has no ray labelled " + std::string(class_name(c)));
  return rays.front();
}

TDivisor Fan::ray_divisor(std::size_t ray) const {
  TDivisor d{std::vector<std::int64_t>(num_rays(), 0)};
  d.coeffs.at(ray) = 1;
  return d;
}

bool Fan::is_face(const std::vector<std::size_t>& ray_set) const {
  for (const auto& cone : max_cones)
    if (std::includes(cone.begin(), cone.end(), ray_set.begin(), ray_set.end()))
      return true;
  return false;
}

Fan build_fan(FamilyParam param) {
  const auto n = static_cast<std::size_t>(param.value());
  if (n + 3 > 64)
    throw std::invalid_argument("n too large for ray bitmasks");
  Fan f;
  f.dim = static_cast<int>(n);
  for (std::size_t i = 0; i < n; ++i) {
    Ray e(n, 0);
    e[i] = 1;
    f.rays.push_back(e);
  }
  const std::size_t e0 = n, w1 = n + 1, w2 = n + 2;
  f.rays.push_back(Ray(n, -1));
  f.rays.push_back(Ray(n, 1));
  Ray minus_e1(n, 0);
  minus_e1[0] = -1;
  f.rays.push_back(minus_e1);

  // Maximal cones of P^n omit one of e_0..e_n.
  std::vector<std::size_t> base(n + 1);
  std::iota(base.begin(), base.end(), 0);
  auto omit = [&](std::size_t r) {
    Cone c;
    for (auto x : base)
      if (x != r)
        c.push_back(x);
    return c;
  };
  const Cone first = omit(e0);  // <e_1..e_n>
  const Cone second = omit(0);  // <e_0, e_2..e_n>
  for (auto r : base) {
    Cone c = omit(r);
    if (c != first && c != second)
      f.max_cones.push_back(c);
  }
  // Star subdivision: replace one generator at a time by the new ray.
  for (const auto& [cone, ray] : {std::pair{first, w1}, std::pair{second, w2}}) {
    for (auto drop : cone) {
      Cone c;
      for (auto x : cone)
        if (x != drop)
          c.push_back(x);
      c.push_back(ray);
      std::sort(c.begin(), c.end());
      f.max_cones.push_back(c);
    }
  }
  std::sort(f.max_cones.begin(), f.max_cones.end());
  assign_labels(f);
  return f;
}

bool is_smooth(const Fan& f) {
  for (const auto& cone : f.max_cones) {
    if (cone.size() != static_cast<std::size_t>(f.dim))
      return false;
    auto det = linalg::determinant(ray_matrix(f, cone));
    if (det != Rational(1) && det != Rational(-1))
      return false;
  }
  return true;
}

bool is_complete(const Fan& f) {
  if (f.max_cones.empty())
    return false;
  std::map<Cone, std::vector<std::size_t>> facet_owners;
  for (std::size_t i = 0; i < f.max_cones.size(); ++i) {
    const auto& cone = f.max_cones[i];
    if (cone.size() != static_cast<std::size_t>(f.dim))
      return false;
    for (std::size_t k = 0; k < cone.size(); ++k) {
      Cone facet;
      for (std::size_t j = 0; j < cone.size(); ++j)
        if (j != k)
          facet.push_back(cone[j]);
      facet_owners[facet].push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> dual(f.max_cones.size());
  for (const auto& [facet, owners] : facet_owners) {
    if (owners.size() != 2)
      return false;
    dual[owners[0]].push_back(owners[1]);
    dual[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> seen(f.max_cones.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop();
    for (auto j : dual[i])
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        todo.push(j);
      }
  }
  return reached == f.max_cones.size();
}

std::size_t picard_rank(const Fan& f) {
  std::vector<std::size_t> all(f.num_rays());
  std::iota(all.begin(), all.end(), 0);
  return f.num_rays() - linalg::rank(ray_matrix(f, all));
}

std::vector<std::vector<std::size_t>> primitive_collections(const Fan& f) {
  const std::size_t r = f.num_rays();
  if (r > 24)
    throw std::invalid_argument("primitive collection enumeration limited to 24 rays");
  std::vector<Mask> cones;
  for (const auto& c : f.max_cones)
    cones.push_back(to_mask(c));
  auto face = [&](Mask s) {
    return std::any_of(cones.begin(), cones.end(), [s](Mask c) { return (s & ~c) == 0; });
  };
  std::vector<std::vector<std::size_t>> out;
  for (Mask s = 1; s < (Mask{1} << r); ++s) {
    if (face(s))
      continue;
    bool minimal = true;
    for (Mask rest = s; rest && minimal; rest &= rest - 1) {
      Mask bit = rest & (~rest + 1);
      minimal = face(s & ~bit);
    }
    if (minimal)
      out.push_back(from_mask(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

bool linearly_equivalent(const Fan& f, const TDivisor& d1, const TDivisor& d2) {
  if (d1.coeffs.size() != f.num_rays() || d2.coeffs.size() != f.num_rays())
    throw std::invalid_argument("T-divisor size does not match the fan");
  std::vector<std::int64_t> diff(f.num_rays());
  for (std::size_t i = 0; i < diff.size(); ++i)
    diff[i] = d1.coeffs[i] - d2.coeffs[i];
  return is_principal(f, diff);
}

TDivisor divisor_class_to_ray_coeffs(const Fan& f, const DivisorClass& d) {
  TDivisor t{std::vector<std::int64_t>(f.num_rays(), 0)};
  t.coeffs[f.representative(RayClass::Y)] = d.a;
  t.coeffs[f.representative(RayClass::T)] = d.b;
  t.coeffs[f.representative(RayClass::U)] = d.c;
  return t;
}

DivisorClass reduce_to_class(const Fan& f, const TDivisor& d) {
  if (d.coeffs.size() != f.num_rays())
    throw std::invalid_argument("T-divisor size does not match the fan");
  const auto y = f.representative(RayClass::Y);
  const auto t = f.representative(RayClass::T);
  const auto u = f.representative(RayClass::U);
  // Subtract div(m) with m chosen to clear every non-basis ray.
  std::vector<std::size_t> others;
  for (std::size_t r = 0; r < f.num_rays(); ++r)
    if (r != y && r != t && r != u)
      others.push_back(r);
  linalg::Vector rhs;
  for (auto r : others)
    rhs.emplace_back(d.coeffs[r]);
  auto m = linalg::solve(ray_matrix(f, others), rhs);
  if (!m || !std::all_of(m->begin(), m->end(), [](const Rational& x) { return x.is_integer(); }))
    throw std::logic_error("basis rays do not complement a lattice basis");
  auto pairing = [&](std::size_t r) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < f.rays[r].size(); ++i)
      s += (*m)[i].num() * f.rays[r][i];
    return s;
  };
  return {d.coeffs[y] - pairing(y), d.coeffs[t] - pairing(t), d.coeffs[u] - pairing(u)};
}

LemmaReport verify_batyrev_data(const Fan& f) {
  auto t0 = std::chrono::steady_clock::now();
  LemmaReport rep;
  rep.lemma_id = "batyrev";
  rep.n = f.dim;
  rep.window = "fan";
  auto fail = [&](std::string why) { rep.counterexamples.push_back({{}, std::move(why)}); };

  auto pcs = primitive_collections(f);
  rep.cases_checked = static_cast<std::int64_t>(pcs.size());
  rep.stats["primitive_collections"] = static_cast<std::int64_t>(pcs.size());
  if (pcs.size() != 5)
    fail("expected 5 primitive collections");

  std::array<std::vector<std::size_t>, 5> classes;
  for (int k = 0; k < 5; ++k) {
    classes[static_cast<std::size_t>(k)] = f.rays_of(static_cast<RayClass>(k));
    rep.stats[std::string("size_") + class_name(static_cast<RayClass>(k))] =
        static_cast<std::int64_t>(classes[static_cast<std::size_t>(k)].size());
  }
  const std::array<std::size_t, 5> expected{1, static_cast<std::size_t>(f.dim - 1), 1, 1, 1};
  for (std::size_t k = 0; k < 5; ++k)
    if (classes[k].size() != expected[k])
      fail(std::string("class ") + class_name(static_cast<RayClass>(k)) + " has wrong size");

  std::set<std::vector<std::size_t>> expected_pcs;
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<std::size_t> u = classes[k];
    u.insert(u.end(), classes[(k + 1) % 5].begin(), classes[(k + 1) % 5].end());
    std::sort(u.begin(), u.end());
    expected_pcs.insert(u);
  }
  if (std::set<std::vector<std::size_t>>(pcs.begin(), pcs.end()) != expected_pcs)
    fail("primitive collections are not the consecutive unions X_i u X_{i+1}");

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

void to_json(nlohmann::json& j, const Fan& f) {
  nlohmann::json labels = nlohmann::json::object();
  for (int k = 0; k < 5; ++k) {
    auto c = static_cast<RayClass>(k);
    auto rays = f.rays_of(c);
    if (c == RayClass::Y)
      labels[class_name(c)] = rays;
    else if (!rays.empty())
      labels[class_name(c)] = rays.front();
  }
  j = {{"dim", f.dim}, {"rays", f.rays}, {"max_cones", f.max_cones}, {"labels", labels}};
}

} // namespace blowup
