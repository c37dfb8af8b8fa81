#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mukai/rational.hpp"

namespace mukai {

/* The two surface kinds the even cohomology lattice supports. epsilon is
 * the a-component of the structure sheaf's vector: 0 abelian, 1 K3. */
enum class Surface { abelian, k3 };

inline int epsilon(Surface s) { return s == Surface::k3 ? 1 : 0; }

inline const char* to_string(Surface s) { return s == Surface::k3 ? "k3" : "abelian"; }

inline std::optional<Surface> parse_surface(const std::string& s) {
    if (s == "abelian") return Surface::abelian;
    if (s == "k3") return Surface::k3;
    return std::nullopt;
}

/* A divisor class on the algebraic part of H^2, as rational coordinates in
 * a fixed basis of the Neron-Severi lattice. */
struct NSClass {
    std::vector<Rat> coords;

    NSClass() = default;
    explicit NSClass(std::vector<Rat> c) : coords(std::move(c)) {}

    static NSClass zero(int rank) { return NSClass(std::vector<Rat>(static_cast<size_t>(rank))); }

    int rank() const { return static_cast<int>(coords.size()); }

    bool is_zero() const {
        for (const Rat& c : coords)
            if (c != 0) return false;
        return true;
    }

    bool is_integral() const {
        for (const Rat& c : coords)
            if (!is_integer(c)) return false;
        return true;
    }

    bool operator==(const NSClass& o) const { return coords == o.coords; }
    bool operator!=(const NSClass& o) const { return !(*this == o); }
};

NSClass operator+(const NSClass& a, const NSClass& b);
NSClass operator-(const NSClass& a, const NSClass& b);
NSClass operator-(const NSClass& a);
NSClass operator*(const Rat& s, const NSClass& a);

/* Neron-Severi lattice: integral Gram matrix with even diagonal plus a fixed
 * ample class H with (H,H) > 0. */
class NSLattice {
  public:
    NSLattice(int rank, std::vector<Int> gram_row_major, std::vector<Int> ample_coords);

    static NSLattice rank1(const Int& n);  // ZH with (H,H) = 2n

    int rank() const { return rank_; }
    const std::vector<Int>& gram() const { return gram_; }
    const std::vector<Int>& ample_coords() const { return ample_; }
    NSClass ample() const;
    Int ample_square() const { return hsq_; }  // (H,H)
    Int n() const { return n_; }               // (H,H)/2

    Rat pair(const NSClass& a, const NSClass& b) const;
    Rat square(const NSClass& a) const { return pair(a, a); }
    Rat deg(const NSClass& a) const;  // (a, H)

    bool same_shape(const NSLattice& o) const { return rank_ == o.rank_ && gram_ == o.gram_ && ample_ == o.ample_; }

  private:
    int rank_;
    std::vector<Int> gram_;
    std::vector<Int> ample_;
    Int hsq_;
    Int n_;
};

/* Element of the even cohomology lattice: (rank, c1, a) with a the
 * point-class coefficient. */
struct MukaiVector {
    Rat r;
    NSClass c1;
    Rat a;

    MukaiVector() = default;
    MukaiVector(Rat rr, NSClass c, Rat aa) : r(std::move(rr)), c1(std::move(c)), a(std::move(aa)) {}

    bool is_integral() const { return is_integer(r) && is_integer(a) && c1.is_integral(); }
    bool is_zero() const { return r == 0 && a == 0 && c1.is_zero(); }

    bool operator==(const MukaiVector& o) const { return r == o.r && a == o.a && c1 == o.c1; }
    bool operator!=(const MukaiVector& o) const { return !(*this == o); }
};

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x, const MukaiVector& y);
MukaiVector operator-(const MukaiVector& x);
MukaiVector operator*(const Rat& s, const MukaiVector& x);

std::string to_string(const MukaiVector& v);

/* <x,y> = (x1,y1) - x0 y2 - x2 y0. */
Rat pairing(const MukaiVector& x, const MukaiVector& y, const NSLattice& lat);

/* (r, c1, a) -> (r, -c1, a). */
MukaiVector dual(const MukaiVector& x);

/* Vector of a tensor product: cup product, then the point component drops
 * by epsilon * r1 * r2. Unit is the structure sheaf vector (1, 0, epsilon). */
MukaiVector mukai_tensor(const MukaiVector& x, const MukaiVector& y, const NSLattice& lat, Surface kind);

/* e^L = (1, L, (L,L)/2) as a cohomology class. */
MukaiVector exp_class(const NSClass& L, const NSLattice& lat);

/* Vector of the line bundle O(L): (1, L, (L,L)/2 + epsilon). */
MukaiVector line_bundle_vector(const NSClass& L, const NSLattice& lat, Surface kind);

/* v . e^L, the vector of E(L).  Plain cup product; equals
 * mukai_tensor(v, line_bundle_vector(L)). */
MukaiVector twist(const MukaiVector& v, const NSClass& L, const NSLattice& lat);

MukaiVector from_chern(const Rat& r, const NSClass& c1, const Rat& ch2, Surface kind);

struct ChernData {
    Rat r;
    NSClass c1;
    Rat ch2;
};

ChernData to_chern(const MukaiVector& v, Surface kind);

bool is_isotropic(const MukaiVector& v, const NSLattice& lat);

/* gcd of all integer entries is 1; errors on non-integral input. */
bool is_primitive(const MukaiVector& v);

MukaiVector structure_sheaf_vector(const NSLattice& lat, Surface kind);  // (1, 0, epsilon)
MukaiVector point_class(const NSLattice& lat);                           // rho = (0, 0, 1)

/* deg(c1)/r; errors when r = 0. */
Rat slope(const MukaiVector& v, const NSLattice& lat);

}  // namespace mukai
