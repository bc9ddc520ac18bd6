#include "wha/groupoid.hpp"

#include "wha/tensor.hpp"

#include <random>
#include <stdexcept>

namespace wha {

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows,
                               std::vector<std::vector<std::optional<std::size_t>>> compose,
                               std::vector<std::size_t> inverse)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), compose_(std::move(compose)),
      inverse_(std::move(inverse)) {
  const std::size_t m = arrows_.size();
  const std::size_t k = objects_.size();
  if (compose_.size() != m || inverse_.size() != m) throw PreconditionError("groupoid tables have wrong size");
  for (const auto& a : arrows_) {
    if (a.src >= k || a.tgt >= k) throw PreconditionError("arrow '" + a.label + "' has an unknown endpoint");
  }
  for (std::size_t f = 0; f < m; ++f) {
    if (compose_[f].size() != m) throw PreconditionError("groupoid composition table has wrong size");
    for (std::size_t g = 0; g < m; ++g) {
      const bool composable = arrows_[f].src == arrows_[g].tgt;
      const auto& h = compose_[f][g];
      if (composable != h.has_value()) {
        throw PreconditionError("composition of '" + arrows_[f].label + "' and '" + arrows_[g].label +
                                "' must be defined exactly when src(f) = tgt(g)");
      }
      if (h && (*h >= m || arrows_[*h].src != arrows_[g].src || arrows_[*h].tgt != arrows_[f].tgt)) {
        throw PreconditionError("composite of '" + arrows_[f].label + "' and '" + arrows_[g].label +
                                "' has wrong endpoints");
      }
    }
  }
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = 0; g < m; ++g) {
      for (std::size_t h = 0; h < m; ++h) {
        auto fg = compose_[f][g];
        auto gh = compose_[g][h];
        if (fg && gh && compose_[*fg][h] != compose_[f][*gh]) {
          throw PreconditionError("composition is not associative at '" + arrows_[f].label + "', '" +
                                  arrows_[g].label + "', '" + arrows_[h].label + "'");
        }
      }
    }
  }
  identity_.assign(k, m);
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t f = 0; f < m; ++f) {
      if (arrows_[f].src != x || arrows_[f].tgt != x) continue;
      bool unit = true;
      for (std::size_t g = 0; g < m && unit; ++g) {
        if (arrows_[g].tgt == x) unit = compose_[f][g] == g;
        if (unit && arrows_[g].src == x) unit = compose_[g][f] == g;
      }
      if (unit) {
        identity_[x] = f;
        break;
      }
    }
    if (identity_[x] == m) throw PreconditionError("object '" + objects_[x] + "' has no identity arrow");
  }
  for (std::size_t f = 0; f < m; ++f) {
    const std::size_t g = inverse_[f];
    if (g >= m || compose_[f][g] != identity_[arrows_[f].tgt] || compose_[g][f] != identity_[arrows_[f].src]) {
      throw PreconditionError("arrow '" + arrows_[f].label + "' has a wrong inverse");
    }
  }
}

bool FiniteGroupoid::is_identity(std::size_t f) const {
  return arrows_[f].src == arrows_[f].tgt && identity_[arrows_[f].src] == f;
}

FiniteGroupoid FiniteGroupoid::pair(std::size_t k) {
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < k; ++i) objects.push_back(std::to_string(i + 1));
  // Arrow (i, j) has target i and source j, matching the matrix unit e_ij.
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) arrows.push_back({"e" + objects[i] + objects[j], j, i});
  }
  const std::size_t m = k * k;
  std::vector<std::vector<std::optional<std::size_t>>> compose(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::size_t> inverse(m);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      inverse[i * k + j] = j * k + i;
      for (std::size_t l = 0; l < k; ++l) compose[i * k + j][j * k + l] = i * k + l;
    }
  }
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose), std::move(inverse));
}

FiniteGroupoid FiniteGroupoid::cyclic(std::size_t m) {
  if (m == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < m; ++i) arrows.push_back({i == 0 ? std::string("1") : "g" + std::to_string(i), 0, 0});
  if (m == 2) arrows[1].label = "g";
  std::vector<std::vector<std::optional<std::size_t>>> compose(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::size_t> inverse(m);
  for (std::size_t i = 0; i < m; ++i) {
    inverse[i] = (m - i) % m;
    for (std::size_t j = 0; j < m; ++j) compose[i][j] = (i + j) % m;
  }
  return FiniteGroupoid({"*"}, std::move(arrows), std::move(compose), std::move(inverse));
}

FiniteGroupoid FiniteGroupoid::product(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  const std::size_t kg = g.objects_.size();
  const std::size_t kh = h.objects_.size();
  const std::size_t mg = g.size();
  const std::size_t mh = h.size();
  std::vector<std::string> objects;
  for (std::size_t x = 0; x < kg; ++x) {
    for (std::size_t y = 0; y < kh; ++y) {
      objects.push_back(kh == 1 ? g.objects_[x] : kg == 1 ? h.objects_[y] : g.objects_[x] + "." + h.objects_[y]);
    }
  }
  std::vector<Arrow> arrows;
  for (std::size_t f = 0; f < mg; ++f) {
    for (std::size_t p = 0; p < mh; ++p) {
      const Arrow& a = g.arrows_[f];
      const Arrow& b = h.arrows_[p];
      std::string label = b.label == "1" ? a.label : a.label + b.label;
      arrows.push_back({label, a.src * kh + b.src, a.tgt * kh + b.tgt});
    }
  }
  const std::size_t m = mg * mh;
  std::vector<std::vector<std::optional<std::size_t>>> compose(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::size_t> inverse(m);
  for (std::size_t f = 0; f < mg; ++f) {
    for (std::size_t p = 0; p < mh; ++p) {
      inverse[f * mh + p] = g.inverse_[f] * mh + h.inverse_[p];
      for (std::size_t f2 = 0; f2 < mg; ++f2) {
        for (std::size_t p2 = 0; p2 < mh; ++p2) {
          auto a = g.compose_[f][f2];
          auto b = h.compose_[p][p2];
          if (a && b) compose[f * mh + p][f2 * mh + p2] = *a * mh + *b;
        }
      }
    }
  }
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose), std::move(inverse));
}

FiniteGroupoid FiniteGroupoid::disjoint_union(const FiniteGroupoid& g, const FiniteGroupoid& h) {
  const std::size_t kg = g.objects_.size();
  const std::size_t mg = g.size();
  const std::size_t m = mg + h.size();
  std::vector<std::string> objects = g.objects_;
  for (const auto& o : h.objects_) objects.push_back(o + "'");
  std::vector<Arrow> arrows = g.arrows_;
  for (const auto& a : h.arrows_) arrows.push_back({a.label + "'", a.src + kg, a.tgt + kg});
  std::vector<std::vector<std::optional<std::size_t>>> compose(m, std::vector<std::optional<std::size_t>>(m));
  std::vector<std::size_t> inverse(m);
  for (std::size_t f = 0; f < mg; ++f) {
    inverse[f] = g.inverse_[f];
    for (std::size_t f2 = 0; f2 < mg; ++f2) compose[f][f2] = g.compose_[f][f2];
  }
  for (std::size_t f = 0; f < h.size(); ++f) {
    inverse[mg + f] = mg + h.inverse_[f];
    for (std::size_t f2 = 0; f2 < h.size(); ++f2) {
      if (auto c = h.compose_[f][f2]) compose[mg + f][mg + f2] = mg + *c;
    }
  }
  return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(compose), std::move(inverse));
}

// ---------------------------------------------------------------- algebras

namespace {

std::vector<std::string> labels(const FiniteGroupoid& g) {
  std::vector<std::string> out;
  for (const auto& a : g.arrows()) out.push_back(a.label);
  return out;
}

}  // namespace

WeakHopfSpec groupoid_algebra(const FiniteGroupoid& g, std::string name) {
  const std::size_t n = g.size();
  StructureConstants c(n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t h = 0; h < n; ++h) {
      if (auto fh = g.compose(f, h)) c.add(f, h, *fh, Scalar(1));
    }
  }
  Algebra alg = Algebra::load(std::move(c), labels(g));
  LinearMap delta(n * n, n);
  LinearMap antipode(n, n);
  std::vector<Scalar> counit(n, Scalar(1));
  for (std::size_t f = 0; f < n; ++f) {
    delta.set_column(f, Vec::unit(n * n, f * n + f));
    antipode.set_column(f, Vec::unit(n, g.inverse(f)));
  }
  return WeakHopfSpec{std::move(name), std::move(alg), std::move(delta), Vec::from_dense(counit), std::move(antipode),
                      std::nullopt, std::nullopt};
}

WeakHopfSpec groupoid_function_algebra(const FiniteGroupoid& g, std::string name) {
  const std::size_t n = g.size();
  StructureConstants c(n);
  for (std::size_t f = 0; f < n; ++f) c.add(f, f, f, Scalar(1));
  std::vector<std::string> names;
  for (const auto& a : g.arrows()) names.push_back("δ" + a.label);
  Algebra alg = Algebra::load(std::move(c), std::move(names));
  LinearMap delta(n * n, n);
  LinearMap antipode(n, n);
  std::vector<Vec::Term> counit;
  std::vector<std::vector<Vec::Term>> cols(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t k = 0; k < n; ++k) {
      if (auto hk = g.compose(h, k)) cols[*hk].emplace_back(h * n + k, Scalar(1));
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    delta.set_column(f, Vec::from_terms(n * n, std::move(cols[f])));
    antipode.set_column(f, Vec::unit(n, g.inverse(f)));
    if (g.is_identity(f)) counit.emplace_back(f, Scalar(1));
  }
  return WeakHopfSpec{std::move(name),
                      std::move(alg),
                      std::move(delta),
                      Vec::from_terms(n, std::move(counit)),
                      std::move(antipode),
                      std::nullopt,
                      std::nullopt};
}

WeakHopfSpec tensor_product(const WeakHopfSpec& x, const WeakHopfSpec& y, std::string name) {
  const std::size_t nx = x.dim();
  const std::size_t ny = y.dim();
  const std::size_t n = nx * ny;
  Algebra alg = tensor_algebra(x.algebra, y.algebra);
  LinearMap delta(n * n, n);
  LinearMap antipode(n, n);
  std::vector<Vec::Term> counit;
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      // Δ(a⊗b) = Σ (a_(1)⊗b_(1)) ⊗ (a_(2)⊗b_(2))
      std::vector<Vec::Term> terms;
      for (const auto& [p, c] : x.coproduct.column(i).terms()) {
        for (const auto& [q, s] : y.coproduct.column(j).terms()) {
          const std::size_t a1 = p / nx, a2 = p % nx, b1 = q / ny, b2 = q % ny;
          terms.emplace_back((a1 * ny + b1) * n + (a2 * ny + b2), c * s);
        }
      }
      delta.set_column(i * ny + j, Vec::from_terms(n * n, std::move(terms)));
      antipode.set_column(i * ny + j, tensor::kron(x.antipode.column(i), y.antipode.column(j)));
      Scalar e = x.counit[i] * y.counit[j];
      if (!e.is_zero()) counit.emplace_back(i * ny + j, e);
    }
  }
  return WeakHopfSpec{std::move(name),
                      std::move(alg),
                      std::move(delta),
                      Vec::from_terms(n, std::move(counit)),
                      std::move(antipode),
                      std::nullopt,
                      std::nullopt};
}

WeakHopfData checked(WeakHopfSpec spec) {
  WeakHopfData d = analyze(std::move(spec));
  Report r = verify_weak_hopf(d);
  if (!r.all_passed()) {
    std::string failed;
    for (const auto& f : r.failed()) failed += " " + f;
    throw std::logic_error("generated instance '" + d.spec.name + "' fails:" + failed);
  }
  return d;
}

TwistElements diagonal_twist_pair(const FiniteGroupoid& g, const std::vector<Scalar>& lambda) {
  const std::size_t k = g.objects().size();
  if (lambda.size() != k) throw PreconditionError("one twist coefficient per object is required");
  std::vector<Vec::Term> u;
  std::vector<Vec::Term> v;
  for (std::size_t x = 0; x < k; ++x) {
    if (lambda[x].is_zero()) throw PreconditionError("twist coefficient for object '" + g.objects()[x] + "' is zero");
    u.emplace_back(g.identity(x), lambda[x]);
    v.emplace_back(g.identity(x), lambda[x].inverse());
  }
  return {Vec::from_terms(g.size(), std::move(u)), Vec::from_terms(g.size(), std::move(v))};
}

RandomInstance random_instance(std::uint64_t seed, const RandomBounds& bounds) {
  if (bounds.max_objects == 0 || bounds.max_isotropy == 0 || bounds.max_dim == 0) {
    throw PreconditionError("random instance bounds must be positive");
  }
  std::mt19937_64 rng(seed);
  // Plain modulo draws: the standard distributions are not portable.
  auto draw = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::size_t objects_left = draw(1, bounds.max_objects);
    std::size_t dim = 0;
    std::optional<FiniteGroupoid> g;
    while (objects_left > 0) {
      std::size_t k = draw(1, objects_left);
      std::size_t m = draw(1, bounds.max_isotropy);
      objects_left -= k;
      dim += k * k * m;
      FiniteGroupoid block = m == 1 ? FiniteGroupoid::pair(k)
                                    : FiniteGroupoid::product(FiniteGroupoid::pair(k), FiniteGroupoid::cyclic(m));
      g = g ? FiniteGroupoid::disjoint_union(*g, block) : block;
    }
    if (dim > bounds.max_dim) continue;

    std::vector<Scalar> lambda;
    for (std::size_t x = 0; x < g->objects().size(); ++x) {
      long num = static_cast<long>(draw(1, 9)) * (draw(0, 1) == 0 ? 1 : -1);
      long den = static_cast<long>(draw(1, 5));
      Scalar re(num, den);
      if (draw(0, 3) == 0) {
        long inum = static_cast<long>(draw(1, 4)) * (draw(0, 1) == 0 ? 1 : -1);
        mpq_class im(inum);
        im /= static_cast<long>(draw(1, 3));
        re += Scalar(mpq_class(0), im);
      }
      lambda.push_back(re);
    }
    std::string name = "random-" + std::to_string(seed);
    TwistElements t = diagonal_twist_pair(*g, lambda);
    return RandomInstance{*g, checked(groupoid_algebra(*g, name)), std::move(lambda), std::move(t)};
  }
  throw std::logic_error("random_instance: bounds admit no instance");
}

}  // namespace wha
