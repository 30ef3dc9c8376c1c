#include "ksg/correlations.hpp"

namespace ksg {

namespace {

std::vector<std::vector<Projector>> side_projectors(const RaySet& side) {
  std::vector<std::vector<Projector>> out;
  for (const Context& ctx : side.declared_contexts()) {
    std::vector<Projector> ps;
    for (int e : ctx.elements) ps.push_back(side.projector(e));
    out.push_back(std::move(ps));
  }
  return out;
}

}  // namespace

CorrelationTable correlation(const Scenario& sc) {
  auto alice = side_projectors(sc.alice);
  auto bob = side_projectors(sc.bob);
  CorrelationTable t;
  t.nx = static_cast<int>(alice.size());
  t.ny = static_cast<int>(bob.size());
  t.na = sc.num_outcomes_a();
  t.nb = sc.num_outcomes_b();
  t.values.assign(static_cast<size_t>(t.nx * t.ny * t.na * t.nb), QuadExt(0));

  const Mat& c = sc.state.coeff();
  QuadExt inv_norm = sc.state.norm2().inverse();

  for (int x = 0; x < t.nx; ++x) {
    // tr(C^T Pi_a C Pi_b) = sum_ij (C^T Pi_a C)_ij (Pi_b)_ji, with Pi_b symmetric.
    std::vector<Mat> reduced;
    for (const Projector& pa : alice[static_cast<size_t>(x)]) {
      reduced.push_back(c.transpose() * pa.matrix() * c);
    }
    for (int y = 0; y < t.ny; ++y) {
      for (size_t a = 0; a < reduced.size(); ++a) {
        for (size_t b = 0; b < bob[static_cast<size_t>(y)].size(); ++b) {
          const Mat& d = reduced[a];
          const Mat& pb = bob[static_cast<size_t>(y)][b].matrix();
          QuadExt tr = 0;
          for (Eigen::Index i = 0; i < d.rows(); ++i)
            for (Eigen::Index j = 0; j < d.cols(); ++j) tr += d(i, j) * pb(j, i);
          t.at(x, y, static_cast<int>(a), static_cast<int>(b)) = tr * inv_norm;
        }
      }
    }
  }

  for (int x = 0; x < t.nx; ++x) {
    for (int y = 0; y < t.ny; ++y) {
      QuadExt sum = 0;
      for (int a = 0; a < t.na; ++a) {
        for (int b = 0; b < t.nb; ++b) {
          const QuadExt& v = t.at(x, y, a, b);
          if (v.sign() < 0) {
            throw ValidationError("negative probability at x=" + std::to_string(x) +
                                  " y=" + std::to_string(y));
          }
          sum += v;
        }
      }
      if (sum != QuadExt(1)) {
        throw ValidationError("probabilities for x=" + std::to_string(x) +
                              " y=" + std::to_string(y) + " sum to " + to_string(sum));
      }
    }
  }
  return t;
}

std::vector<std::array<int, 4>> zeros(const CorrelationTable& t) {
  std::vector<std::array<int, 4>> out;
  for (int x = 0; x < t.nx; ++x)
    for (int y = 0; y < t.ny; ++y)
      for (int a = 0; a < t.na; ++a)
        for (int b = 0; b < t.nb; ++b)
          if (t.at(x, y, a, b).is_zero()) out.push_back({x, y, a, b});
  return out;
}

bool check_nosignaling(const CorrelationTable& t) {
  // Alice's marginal p(a|x) must not depend on y.
  for (int x = 0; x < t.nx; ++x) {
    for (int a = 0; a < t.na; ++a) {
      QuadExt ref = 0;
      for (int b = 0; b < t.nb; ++b) ref += t.at(x, 0, a, b);
      for (int y = 1; y < t.ny; ++y) {
        QuadExt m = 0;
        for (int b = 0; b < t.nb; ++b) m += t.at(x, y, a, b);
        if (m != ref) return false;
      }
    }
  }
  for (int y = 0; y < t.ny; ++y) {
    for (int b = 0; b < t.nb; ++b) {
      QuadExt ref = 0;
      for (int a = 0; a < t.na; ++a) ref += t.at(0, y, a, b);
      for (int x = 1; x < t.nx; ++x) {
        QuadExt m = 0;
        for (int a = 0; a < t.na; ++a) m += t.at(x, y, a, b);
        if (m != ref) return false;
      }
    }
  }
  return true;
}

namespace {

std::vector<Projector> construct_context(const PureState& state,
                                         const std::vector<Projector>& measurement, bool post,
                                         const std::string& where) {
  std::vector<Projector> out;
  for (const Projector& pi : measurement) {
    Mat reduced = post ? reduced_alice_post(state, pi) : reduced_alice_pre(state, pi);
    if (is_zero(reduced)) continue;  // zero-probability outcome contributes nothing
    out.push_back(support_projector(reduced));
  }
  if (out.empty()) throw ValidationError(where + ": all outcomes have zero probability");
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t j = i + 1; j < out.size(); ++j) {
      if (!is_zero(Mat(out[i].matrix() * out[j].matrix()))) {
        throw ValidationError(where + ": constructed supports are not mutually orthogonal");
      }
    }
  }
  Mat sum = Mat::Zero(state.dim_a(), state.dim_a());
  for (const Projector& p : out) sum += p.matrix();
  if (!is_identity(sum)) {
    throw ValidationError(where + ": constructed supports do not sum to the identity");
  }
  return out;
}

}  // namespace

ConstructedContexts theorem1_construct(const Scenario& sc) {
  ConstructedContexts cc;
  auto alice = side_projectors(sc.alice);
  auto bob = side_projectors(sc.bob);
  for (size_t x = 0; x < alice.size(); ++x) {
    cc.s_a.push_back(
        construct_context(sc.state, alice[x], /*post=*/true, "side A, x=" + std::to_string(x)));
  }
  for (size_t y = 0; y < bob.size(); ++y) {
    cc.s_b.push_back(
        construct_context(sc.state, bob[y], /*post=*/false, "side B, y=" + std::to_string(y)));
  }
  return cc;
}

namespace {

// A rank-one projector is u u^T / norm2(u); any nonzero column is a multiple
// of u, and ray canonicalization removes the scale.
Ray projector_ray(const Projector& p, long radical) {
  if (p.rank() != 1) {
    throw ValidationError("rank-" + std::to_string(p.rank()) +
                          " projector cannot be written as a single ray");
  }
  for (Eigen::Index j = 0; j < p.matrix().cols(); ++j) {
    bool nonzero = false;
    for (Eigen::Index i = 0; i < p.matrix().rows(); ++i) {
      if (!p.matrix()(i, j).is_zero()) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) return Ray(p.matrix().col(j), radical);
  }
  throw ValidationError("zero projector");
}

}  // namespace

Scenario constructed_to_scenario(const ConstructedContexts& cc, const Scenario& source) {
  long radical = source.radical();
  auto build_side = [&](const std::vector<std::vector<Projector>>& ctxs, int dim,
                        const char* prefix) {
    RaySetBuilder b(dim, radical);
    int i = 0;
    for (const auto& ctx : ctxs) {
      std::vector<int> elems;
      for (const Projector& p : ctx) elems.push_back(b.add_ray(projector_ray(p, radical)));
      b.add_context(prefix + std::to_string(i++), std::move(elems));
    }
    return b.build();
  };
  // Both constructed sides live on Alice's space; pair them with the
  // maximally entangled state there so the output is a self-contained
  // scenario of matching dimensions.
  int d = source.dim_a();
  return Scenario{PureState(Mat::Identity(d, d)), build_side(cc.s_a, d, "x"),
                  build_side(cc.s_b, d, "y")};
}

}  // namespace ksg
