#include <gtest/gtest.h>

#include <random>

#include "drgkit/error.hpp"
#include "drgkit/families.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/spectra.hpp"
#include "drgkit/terwilliger.hpp"
#include "drgkit/tmodules.hpp"
#include "oracles.hpp"

namespace drgkit {
namespace {

AlgebraicScalar s(const char* text) { return AlgebraicScalar::parse(text); }

struct Built {
  Graph g;
  DistanceData dd;
  DrgParameters params;
  EigenData ed;

  explicit Built(FamilySpec fs)
      : g(construct(fs)), dd(distances(g)), params(verify_drg(g, dd)), ed(eigen_data(dd, params, false, false)) {}
};

const ModuleDescriptor* find_class(const ModuleDecomposition& md, std::size_t endpoint, std::size_t dim,
                                   const AlgebraicScalar& lambda) {
  for (const auto& d : md.descriptors)
    if (d.endpoint == endpoint && d.dim == dim && d.local_eigenvalue && *d.local_eigenvalue == lambda) return &d;
  return nullptr;
}

TEST(DecomposeSrg, J82Classes) {
  const Built st({Family::johnson, {8, 2}});
  const SrgParams p = *srg_params(st.params);
  const ModuleDecomposition md = decompose_srg(st.g, st.dd, 0, p);
  ASSERT_EQ(md.descriptors.size(), 5u);
  EXPECT_EQ(md.descriptors[0].endpoint, 0u);
  EXPECT_EQ(md.descriptors[0].dim, 3u);
  EXPECT_EQ(md.descriptors[0].multiplicity, 1u);

  const auto* two = find_class(md, 1, 2, s("0"));
  ASSERT_TRUE(two);
  EXPECT_EQ(two->multiplicity, 5u);
  EXPECT_EQ(two->a_seq, (std::vector<AlgebraicScalar>{s("0"), s("2")}));
  EXPECT_EQ(two->x_seq, (std::vector<AlgebraicScalar>{s("8")}));

  ASSERT_TRUE(find_class(md, 1, 1, s("4")));
  EXPECT_EQ(find_class(md, 1, 1, s("4"))->multiplicity, 1u);
  ASSERT_TRUE(find_class(md, 1, 1, s("-2")));
  EXPECT_EQ(find_class(md, 1, 1, s("-2"))->multiplicity, 5u);
  ASSERT_TRUE(find_class(md, 2, 1, s("-2")));
  EXPECT_EQ(find_class(md, 2, 1, s("-2"))->multiplicity, 9u);

  EXPECT_EQ(md.total(), 28u);
  EXPECT_EQ(wedderburn_dim(md), 16u);
  EXPECT_EQ(dimension_sequence(md, p), (DimensionSequence{2, 1, 1, 1}));
}

TEST(DecomposeSrg, ModuleMatrix) {
  const Built st({Family::johnson, {8, 2}});
  const ModuleDecomposition md = decompose_srg(st.g, st.dd, 0, *srg_params(st.params));
  const ExactMatrix m = module_action_matrix(*find_class(md, 1, 2, s("0")));
  ASSERT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(0, 0), s("0"));
  EXPECT_EQ(m(0, 1), s("8"));
  EXPECT_EQ(m(1, 0), s("1"));
  EXPECT_EQ(m(1, 1), s("2"));
}

TEST(DecomposeSrg, ShrikhandeIsComplete) {
  const Built st({Family::shrikhande, {}});
  const SrgParams p = *srg_params(st.params);
  for (Vertex x = 0; x < st.g.order(); ++x) {
    const ModuleDecomposition md = decompose_srg(st.g, st.dd, x, p);
    EXPECT_EQ(md.total(), 16u);
    EXPECT_EQ(wedderburn_dim(md), 20u);
  }
}

TEST(DecomposeSrg, RejectsOtherShapes) {
  const Built st({Family::icosahedron, {}});
  try {
    decompose_srg(st.g, st.dd, 0, SrgParams::make(28, 12, 6, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "not strongly regular");
  }
}

TEST(DimensionFormula, Examples) {
  EXPECT_EQ(srg_dim_formula({1, 4, 1, 4}), 27u);
  EXPECT_EQ(srg_dim_formula({0, 0, 0, 0}), 9u);
  EXPECT_EQ(srg_dim_formula({2, 1, 1, 1}), 16u);
  EXPECT_EQ(srg_dim_formula_dual({1, 4, 1, 2}), 19u);
}

TEST(DimensionSequence, ChangOrbits) {
  const Built c1({Family::chang, {1}});
  const SrgParams p = *srg_params(c1.params);
  std::size_t seen = 0;
  for (Vertex x = 0; x < c1.g.order(); ++x) {
    const ModuleDecomposition md = decompose_srg(c1.g, c1.dd, x, p);
    const DimensionSequence ds = dimension_sequence(md, p);
    if (wedderburn_dim(md) == 27u) {
      EXPECT_EQ(ds, (DimensionSequence{1, 4, 1, 4}));
      ++seen;
    }
  }
  EXPECT_EQ(seen, 24u);
}

TEST(DecomposeSrgProperty, AllVerticesAgainstClosure) {
  for (FamilySpec fs : {FamilySpec{Family::shrikhande, {}}, FamilySpec{Family::rook_grid, {4}},
                        FamilySpec{Family::johnson, {8, 2}}, FamilySpec{Family::chang, {1}},
                        FamilySpec{Family::chang, {2}}, FamilySpec{Family::chang, {3}},
                        FamilySpec{Family::triangular_complement, {6}}, FamilySpec{Family::complete_bipartite, {3}}}) {
    const Built st(fs);
    const SrgParams p = *srg_params(st.params);
    for (Vertex x = 0; x < st.g.order(); ++x) {
      const ModuleDecomposition md = decompose_srg(st.g, st.dd, x, p);
      EXPECT_NO_THROW(validate_decomposition(md, st.ed.theta, false));
      const DimensionSequence ds = dimension_sequence(md, p);
      EXPECT_EQ(ds.l1p, ds.l2p) << st.g.label() << " x=" << x;
      EXPECT_EQ(md.descriptors.size() - 1, ds.l1 + ds.l2 + ds.l1p);
      const std::size_t w = wedderburn_dim(md);
      EXPECT_EQ(w, srg_dim_formula(ds));
      EXPECT_EQ(w, srg_dim_formula_dual(ds));
      EXPECT_EQ(w, terwilliger_closure(st.g, x, st.dd).dim) << st.g.label() << " x=" << x;
    }
  }
}

TEST(DecomposeSrgProperty, RelabelingInvariance) {
  std::mt19937_64 rng(81);
  const Built st({Family::chang, {2}});
  const SrgParams p = *srg_params(st.params);
  for (int trial = 0; trial < 4; ++trial) {
    const auto perm = oracle::random_permutation(st.g.order(), rng);
    const Graph h = oracle::relabel(st.g, perm);
    const DistanceData dh = distances(h);
    const Vertex x = rng() % st.g.order();
    const auto a = decompose_srg(st.g, st.dd, x, p);
    const auto b = decompose_srg(h, dh, perm[x], p);
    ASSERT_EQ(a.descriptors.size(), b.descriptors.size());
    for (std::size_t i = 0; i < a.descriptors.size(); ++i) {
      EXPECT_EQ(a.descriptors[i].multiplicity, b.descriptors[i].multiplicity);
      EXPECT_EQ(a.descriptors[i].a_seq, b.descriptors[i].a_seq);
    }
  }
}

TEST(Taylor, IcosahedronParameters) {
  // θ = (5, √5, -1, -√5); σ = (θ_1 + θ_2)/2, τ = (θ_2 + θ_3)/2.
  const TaylorParams tp = TaylorParams::make(5, 2);
  EXPECT_EQ(tp.sigma, s("-1/2 + 1/2√5"));
  EXPECT_EQ(tp.tau, s("-1/2 - 1/2√5"));
  EXPECT_EQ(tp.sigma * AlgebraicScalar(2), tp.theta[1] + tp.theta[2]);
  EXPECT_EQ(tp.tau * AlgebraicScalar(2), tp.theta[2] + tp.theta[3]);
  EXPECT_NE(tp.sigma * AlgebraicScalar(2), tp.theta[1] - tp.theta[2]);
  EXPECT_EQ(tp.m_sigma, AlgebraicScalar(2));
  EXPECT_EQ(tp.m_tau, AlgebraicScalar(2));
  EXPECT_THROW(TaylorParams::make(5, 4), Error);
}

TEST(Taylor, IcosahedronDecomposition) {
  const Built st({Family::icosahedron, {}});
  const ModuleDecomposition md = decompose_taylor(st.g, st.dd, 0, 5, 2);
  ASSERT_EQ(md.descriptors.size(), 3u);
  EXPECT_EQ(md.total(), 12u);
  EXPECT_EQ(wedderburn_dim(md), 24u);
  const auto* sig = find_class(md, 1, 2, s("-1/2 + 1/2√5"));
  ASSERT_TRUE(sig);
  EXPECT_EQ(sig->multiplicity, 2u);
  const ExactMatrix m = module_action_matrix(*sig);
  EXPECT_EQ(m(0, 0), s("-1/2 + 1/2√5"));
  EXPECT_EQ(m(0, 1), s("3/2 + 1/2√5"));
  EXPECT_EQ(m(1, 0), s("1"));
  EXPECT_EQ(m(1, 1), s("-1/2 + 1/2√5"));
  ASSERT_FALSE(md.notes.empty());
  EXPECT_NO_THROW(validate_decomposition(md, st.ed.theta, true));
}

TEST(Taylor, J63AllVertices) {
  const Built st({Family::johnson, {6, 3}});
  ASSERT_TRUE(is_taylor_array(st.params));
  for (Vertex x = 0; x < st.g.order(); ++x) {
    const ModuleDecomposition md = decompose_taylor(st.g, st.dd, x, 9, 4);
    EXPECT_EQ(md.total(), 20u);
    EXPECT_EQ(wedderburn_dim(md), 24u);
    EXPECT_EQ(terwilliger_closure(st.g, x, st.dd).dim, 24u);
  }
  EXPECT_FALSE(is_taylor_array(Built({Family::hamming, {3, 2}}).params));
  EXPECT_THROW(decompose_taylor(st.g, st.dd, 0, 5, 2), Error);
}

TEST(At4, J84Parameters) {
  const At4Params ap = At4Params::make(2, 2);
  EXPECT_EQ(ap.theta, (std::array<long, 5>{16, 8, 2, -2, -4}));
  EXPECT_EQ(ap.local, SrgParams::make(16, 6, 2, 2));
  EXPECT_EQ(ap.m_bplus, Rational(6));
  EXPECT_EQ(ap.m_bminus, Rational(9));
  EXPECT_EQ(ap.a1(2), 4);
  EXPECT_EQ(ap.a1(-2), 0);
  EXPECT_THROW(At4Params::make(0, 2), Error);
  EXPECT_THROW(At4Params::make(1, 1), Error);
}

TEST(At4, FromArrayAndMultiplicities) {
  for (auto [fs, p, q] : {std::tuple{FamilySpec{Family::johnson, {8, 4}}, 2L, 2L},
                          std::tuple{FamilySpec{Family::halved_cube, {8}}, 4L, 2L}}) {
    const Built st(fs);
    const auto ap = At4Params::from_array(st.params);
    ASSERT_TRUE(ap) << st.g.label();
    EXPECT_EQ(ap->p, p);
    EXPECT_EQ(ap->q, q);
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(st.ed.theta[i], AlgebraicScalar(ap->theta[i]));
      EXPECT_EQ(ap->mult[i], Rational(static_cast<long>(st.ed.mult[i])));
    }
  }
  EXPECT_FALSE(At4Params::from_array(Built({Family::johnson, {6, 3}}).params));
}

TEST(At4, J84Decomposition) {
  const Built st({Family::johnson, {8, 4}});
  At4Residual res;
  const ModuleDecomposition md = decompose_at4(st.g, st.dd, 0, 2, 2, {}, &res);
  EXPECT_EQ(md.total(), 70u);
  std::size_t ell = 0;
  for (const auto& d : md.descriptors) {
    if (d.endpoint == 1) {
      EXPECT_EQ(d.dim, 3u);
      EXPECT_EQ(d.a_seq.front(), d.a_seq.back());
    }
    if (d.endpoint != 2) continue;
    ++ell;
    ASSERT_TRUE(d.local_eigenvalue);
    const AlgebraicScalar v = *d.local_eigenvalue;
    EXPECT_TRUE(v == s("8") || v == s("2") || v == s("-2") || v == s("-4")) << v.str();
  }
  EXPECT_EQ(ell, res.residual.distinct());
  EXPECT_LE(res.distinct_delta2, 7u);
  EXPECT_EQ(wedderburn_dim(md), ell + 43);
  EXPECT_EQ(wedderburn_dim(md), terwilliger_closure(st.g, 0, st.dd).dim);
  // Multiplicities from the trace system agree with the residual spectrum.
  for (std::size_t i = 0; i < 4; ++i)
    EXPECT_EQ(res.trace_mult[i], Rational(static_cast<long>(res.residual.multiplicity(AlgebraicScalar(st.ed.theta[i + 1])))));
  EXPECT_NO_THROW(validate_decomposition(md, st.ed.theta, true));
  EXPECT_THROW(decompose_at4(st.g, st.dd, 0, 4, 2), Error);
}

TEST(DecomposeVertex, Dispatch) {
  const Built shr({Family::shrikhande, {}});
  EXPECT_TRUE(decompose_vertex(shr.g, shr.dd, shr.params, shr.ed.theta, 0));
  const Built h({Family::hamming, {3, 3}});
  EXPECT_FALSE(decompose_vertex(h.g, h.dd, h.params, h.ed.theta, 0));
  const Built ico({Family::icosahedron, {}});
  const auto md = decompose_vertex(ico.g, ico.dd, ico.params, ico.ed.theta, 3);
  ASSERT_TRUE(md);
  EXPECT_EQ(wedderburn_dim(*md), 24u);
}

TEST(Validate, RejectsBrokenDecomposition) {
  const Built st({Family::johnson, {8, 2}});
  ModuleDecomposition md = decompose_srg(st.g, st.dd, 0, *srg_params(st.params));
  md.descriptors[1].multiplicity += 1;
  try {
    validate_decomposition(md, st.ed.theta, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "module check");
  }
  md = decompose_srg(st.g, st.dd, 0, *srg_params(st.params));
  md.descriptors[1].a_seq.back() += AlgebraicScalar(1);
  EXPECT_THROW(validate_decomposition(md, st.ed.theta, false), Error);
}

}  // namespace
}  // namespace drgkit
