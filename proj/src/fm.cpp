#include "mukai/fm.hpp"

#include <stdexcept>

namespace mukai {

NsMap NsMap::identity(int rank) {
    NsMap out;
    out.rows = rank;
    out.cols = rank;
    out.m.assign(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i) out.m[static_cast<size_t>(i) * rank + i] = Rat(1);
    return out;
}

NSClass NsMap::apply(const NSClass& c) const {
    if (c.rank() != cols) throw std::invalid_argument("NsMap::apply: rank mismatch");
    NSClass out = NSClass::zero(rows);
    for (int i = 0; i < rows; ++i) {
        Rat s(0);
        for (int j = 0; j < cols; ++j) s += m[static_cast<size_t>(i) * cols + j] * c.coords[static_cast<size_t>(j)];
        out.coords[static_cast<size_t>(i)] = s;
    }
    return out;
}

FMContext::FMContext(Surface kind, NSLattice ns_x, NSLattice ns_y, MukaiVector v0, MukaiVector w0, NsMap map)
    : kind_(kind),
      ns_x_(std::move(ns_x)),
      ns_y_(std::move(ns_y)),
      v0_(std::move(v0)),
      w0_(std::move(w0)),
      v0_dual_(dual(v0_)),
      map_(std::move(map)),
      r0_(int_part(v0_.r)),
      n_(ns_x_.n()) {}

FMContext make_context(Surface kind, const NSLattice& ns_x, const NSLattice& ns_y, const MukaiVector& v0,
                       const MukaiVector& w0, const NsMap& map) {
    if (v0.c1.rank() != ns_x.rank()) throw std::invalid_argument("make_context: v0 rank mismatch");
    if (w0.c1.rank() != ns_y.rank()) throw std::invalid_argument("make_context: w0 rank mismatch");
    if (!v0.is_integral() || !w0.is_integral()) throw std::invalid_argument("make_context: fiber vectors must be integral");
    if (!(v0.r > 0) || v0.r != w0.r) throw std::invalid_argument("make_context: fiber vectors need equal positive rank");
    if (!is_isotropic(v0, ns_x)) throw std::invalid_argument("make_context: v0 not isotropic");
    if (!is_isotropic(w0, ns_y)) throw std::invalid_argument("make_context: w0 not isotropic");
    if (!is_primitive(v0)) throw std::invalid_argument("make_context: v0 not primitive");
    if (!is_primitive(w0)) throw std::invalid_argument("make_context: w0 not primitive");
    if (map.cols != ns_x.rank() || map.rows != ns_y.rank())
        throw std::invalid_argument("make_context: divisor map has wrong shape");
    if (ns_x.ample_square() != ns_y.ample_square())
        throw std::invalid_argument("make_context: polarization squares differ");

    // The divisor map must be an isometry and carry H to Hhat.
    const int rx = ns_x.rank();
    std::vector<NSClass> basis_img;
    basis_img.reserve(static_cast<size_t>(rx));
    for (int i = 0; i < rx; ++i) {
        NSClass e = NSClass::zero(rx);
        e.coords[static_cast<size_t>(i)] = Rat(1);
        basis_img.push_back(map.apply(e));
    }
    for (int i = 0; i < rx; ++i)
        for (int j = 0; j < rx; ++j) {
            NSClass ei = NSClass::zero(rx), ej = NSClass::zero(rx);
            ei.coords[static_cast<size_t>(i)] = Rat(1);
            ej.coords[static_cast<size_t>(j)] = Rat(1);
            if (ns_y.pair(basis_img[static_cast<size_t>(i)], basis_img[static_cast<size_t>(j)]) != ns_x.pair(ei, ej))
                throw std::invalid_argument("make_context: divisor map is not an isometry");
        }
    if (map.apply(ns_x.ample()) != ns_y.ample())
        throw std::invalid_argument("make_context: divisor map must carry the polarization to the polarization");

    return FMContext(kind, ns_x, ns_y, v0, w0, map);
}

FMContext poincare_context(const NSLattice& ns) {
    MukaiVector unit{Rat(1), NSClass::zero(ns.rank()), Rat(0)};
    return make_context(Surface::abelian, ns, ns, unit, unit, NsMap::identity(ns.rank()));
}

FMContext poincare_context_rank1(const Int& n) { return poincare_context(NSLattice::rank1(n)); }

FMContext k3_example_context(const Int& n, const Int& k) {
    if (n <= 0) throw std::invalid_argument("k3_example_context: n must be positive");
    if (k <= 0) throw std::invalid_argument("k3_example_context: k must be positive");
    NSLattice ns = NSLattice::rank1(n);
    NSClass mk = NSClass::zero(1);
    mk.coords[0] = Rat(-k);
    MukaiVector fiber{Rat(k * k * n), mk, Rat(1)};
    return make_context(Surface::k3, ns, ns, fiber, fiber, NsMap::identity(1));
}

FMCoordinates decompose(const MukaiVector& v, const FMContext& ctx) {
    if (v.c1.rank() != ctx.ns_x().rank()) throw std::invalid_argument("decompose: rank mismatch");
    const Rat r0(ctx.r0());
    FMCoordinates c;
    c.l = v.r / r0;
    c.a = -pairing(v, ctx.v0_dual(), ctx.ns_x()) / r0;
    // deg with respect to G1 = v0^v, scaled by 1 / (r0 (H,H)).
    TwistData g1{ctx.v0_dual()};
    c.d = deg_twisted(g1, v, ctx.ns_x()) / (r0 * Rat(ctx.ns_x().ample_square()));
    c.D = v.c1 + c.l * ctx.v0().c1 - c.d * ctx.ns_x().ample();
    if (ctx.ns_x().pair(c.D, ctx.ns_x().ample()) != 0) throw std::logic_error("decompose: D not orthogonal to H");
    return c;
}

FMCoordinates decompose_y(const MukaiVector& w, const FMContext& ctx) {
    if (w.c1.rank() != ctx.ns_y().rank()) throw std::invalid_argument("decompose_y: rank mismatch");
    const Rat r0(ctx.r0());
    const NSClass& xi_t = ctx.w0().c1;  // xi~0
    const NSClass Hh = ctx.ns_y().ample();
    FMCoordinates c;
    c.a = w.r / r0;
    c.l = -pairing(w, ctx.w0(), ctx.ns_y()) / r0;
    c.d = (c.a * ctx.ns_y().pair(xi_t, Hh) - ctx.ns_y().pair(w.c1, Hh)) / Rat(ctx.ns_y().ample_square());
    c.D = c.a * xi_t - w.c1 - c.d * Hh;
    if (ctx.ns_y().pair(c.D, Hh) != 0) throw std::logic_error("decompose_y: D not orthogonal to Hhat");
    return c;
}

MukaiVector recompose(const FMCoordinates& c, const FMContext& ctx, Side side) {
    const Rat r0(ctx.r0());
    if (side == Side::X) {
        if (c.D.rank() != ctx.ns_x().rank()) throw std::invalid_argument("recompose: D rank mismatch");
        const NSClass& xi0 = ctx.v0().c1;
        const NSClass mov = c.d * ctx.ns_x().ample() + c.D;
        MukaiVector v;
        v.r = c.l * r0;
        v.c1 = -c.l * xi0 + mov;
        const Rat a0 = ctx.v0().a;
        v.a = c.l * a0 + c.a - ctx.ns_x().pair(mov, xi0) / r0;
        return v;
    }
    if (c.D.rank() != ctx.ns_y().rank()) throw std::invalid_argument("recompose: D rank mismatch");
    const NSClass& xi_t = ctx.w0().c1;
    const NSClass mov = c.d * ctx.ns_y().ample() + c.D;
    MukaiVector w;
    w.r = c.a * r0;
    w.c1 = c.a * xi_t - mov;
    const Rat a_t = ctx.w0().a;
    w.a = c.l + c.a * a_t - ctx.ns_y().pair(mov, xi_t) / r0;
    return w;
}

MukaiVector fm_apply(const MukaiVector& v, const FMContext& ctx) {
    FMCoordinates c = decompose(v, ctx);
    c.D = ctx.map().apply(c.D);
    return recompose(c, ctx, Side::Y);
}

MukaiVector gm_apply(const MukaiVector& v, const FMContext& ctx) { return dual(fm_apply(v, ctx)); }

MukaiVector fm_apply_k3_delta(const MukaiVector& v, const Int& n, const Int& k) {
    if (v.c1.rank() != 1) throw std::invalid_argument("fm_apply_k3_delta: rank-1 divisor lattice only");
    const Rat c = v.c1.coords[0];
    MukaiVector out;
    out.r = v.r - Rat(2 * n * k) * c + v.a * Rat(k * k * n);
    out.c1 = NSClass::zero(1);
    out.c1.coords[0] = c - v.a * Rat(k);
    out.a = v.a;
    return out;
}

Rat bogomolov_floor(const FMCoordinates& c, const Int& r0, Surface kind) {
    return bogomolov_floor(c.a, c.l, r0, kind);
}

}  // namespace mukai
