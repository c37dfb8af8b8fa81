#pragma once

#include "mukai/twisted.hpp"

namespace mukai {

/* Rational linear map between the divisor lattices of the two sides,
 * as a rows x cols matrix acting on coordinates. */
struct NsMap {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> m;  // row-major

    static NsMap identity(int rank);

    NSClass apply(const NSClass& c) const;
};

/* Coordinates of a vector against the transform's distinguished classes:
 * v = l v0^v + a rho + (dH + D) - ((dH + D), xi0) rho / r0 on the source
 * side, and symmetrically on the target side.  D is orthogonal to the
 * polarization. */
struct FMCoordinates {
    Rat l;
    Rat a;
    Rat d;
    NSClass D;
};

enum class Side { X, Y };

/* Everything needed to apply the transform on cohomology: the surface kind,
 * both divisor lattices, the fiber vectors v0 (source) and w0 (target), and
 * the induced divisor correspondence. */
class FMContext {
  public:
    FMContext(Surface kind, NSLattice ns_x, NSLattice ns_y, MukaiVector v0, MukaiVector w0, NsMap map);

    Surface kind() const { return kind_; }
    const NSLattice& ns_x() const { return ns_x_; }
    const NSLattice& ns_y() const { return ns_y_; }
    const MukaiVector& v0() const { return v0_; }
    const MukaiVector& w0() const { return w0_; }
    const MukaiVector& v0_dual() const { return v0_dual_; }
    const NsMap& map() const { return map_; }
    const Int& r0() const { return r0_; }
    const Int& n() const { return n_; }

    /* Smallest admissible step of the d coordinate, 1/(2 n r0). */
    Rat d_quantum() const { return make_rat(1, Int(2 * n_ * r0_)); }

  private:
    Surface kind_;
    NSLattice ns_x_;
    NSLattice ns_y_;
    MukaiVector v0_;
    MukaiVector w0_;
    MukaiVector v0_dual_;
    NsMap map_;
    Int r0_;
    Int n_;
};

/* Validating constructor.  Demands: v0 and w0 integral, primitive,
 * isotropic, of equal positive rank; the divisor map an isometry taking H
 * to Hhat; (Hhat, Hhat) = (H, H). */
FMContext make_context(Surface kind, const NSLattice& ns_x, const NSLattice& ns_y, const MukaiVector& v0,
                       const MukaiVector& w0, const NsMap& map);

/* Transform of the ideal sheaf of the diagonal on an abelian surface times
 * its dual: v0 = w0 = (1, 0, 0), identity divisor map. */
FMContext poincare_context(const NSLattice& ns);
FMContext poincare_context_rank1(const Int& n);

/* The K3 example family: NS = ZH with (H,H) = 2n, fiber vectors
 * (k^2 n, -kH, 1) on both sides (the kernel is the dual of the universal
 * family, so the fibers carry the dual of the isotropic vector
 * (k^2 n, kH, 1)). */
FMContext k3_example_context(const Int& n, const Int& k);

FMCoordinates decompose(const MukaiVector& v, const FMContext& ctx);    // source side
FMCoordinates decompose_y(const MukaiVector& w, const FMContext& ctx);  // target side

/* Rebuild a vector from coordinates.  For Side::Y the D entry is read as a
 * target-side class. */
MukaiVector recompose(const FMCoordinates& c, const FMContext& ctx, Side side);

/* Cohomological transform, alternating-sum convention: the image of a
 * sheaf with index-1 vanishing is minus the vector of its first image
 * sheaf. */
MukaiVector fm_apply(const MukaiVector& v, const FMContext& ctx);

/* dual o fm_apply (the contravariant companion; an even shift acts
 * trivially on cohomology). */
MukaiVector gm_apply(const MukaiVector& v, const FMContext& ctx);

/* Closed form of the K3 example transform on NS = ZH:
 * 1 -> 1, xi -> -k(H,xi) + xi, rho -> k^2 n - kH + rho. */
MukaiVector fm_apply_k3_delta(const MukaiVector& v, const Int& n, const Int& k);

/* Floor for candidate squares in the transform's coordinates; delegates to
 * the (a, l) primitive. */
Rat bogomolov_floor(const FMCoordinates& c, const Int& r0, Surface kind);

}  // namespace mukai
