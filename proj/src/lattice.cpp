#include "mukai/lattice.hpp"

#include <sstream>

namespace mukai {

namespace {

void check_rank(const NSClass& c, const NSLattice& lat, const char* where) {
    if (c.rank() != lat.rank())
        throw std::invalid_argument(std::string(where) + ": class has " + std::to_string(c.rank()) +
                                    " coordinates, lattice rank is " + std::to_string(lat.rank()));
}

void check_same_rank(const NSClass& a, const NSClass& b, const char* where) {
    if (a.rank() != b.rank())
        throw std::invalid_argument(std::string(where) + ": rank mismatch " + std::to_string(a.rank()) + " vs " +
                                    std::to_string(b.rank()));
}

}  // namespace

NSClass operator+(const NSClass& a, const NSClass& b) {
    check_same_rank(a, b, "NSClass+");
    NSClass out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

NSClass operator-(const NSClass& a, const NSClass& b) {
    check_same_rank(a, b, "NSClass-");
    NSClass out = a;
    for (size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= b.coords[i];
    return out;
}

NSClass operator-(const NSClass& a) {
    NSClass out = a;
    for (Rat& c : out.coords) c = -c;
    return out;
}

NSClass operator*(const Rat& s, const NSClass& a) {
    NSClass out = a;
    for (Rat& c : out.coords) c *= s;
    return out;
}

NSLattice::NSLattice(int rank, std::vector<Int> gram_row_major, std::vector<Int> ample_coords)
    : rank_(rank), gram_(std::move(gram_row_major)), ample_(std::move(ample_coords)) {
    if (rank_ < 1) throw std::invalid_argument("NSLattice: rank must be >= 1");
    if (gram_.size() != static_cast<size_t>(rank_) * static_cast<size_t>(rank_))
        throw std::invalid_argument("NSLattice: gram matrix must have rank*rank entries");
    if (ample_.size() != static_cast<size_t>(rank_))
        throw std::invalid_argument("NSLattice: ample class must have rank coordinates");
    for (int i = 0; i < rank_; ++i) {
        if (gram_[static_cast<size_t>(i) * rank_ + i] % 2 != 0)
            throw std::invalid_argument("NSLattice: gram diagonal must be even");
        for (int j = 0; j < i; ++j)
            if (gram_[static_cast<size_t>(i) * rank_ + j] != gram_[static_cast<size_t>(j) * rank_ + i])
                throw std::invalid_argument("NSLattice: gram matrix must be symmetric");
    }
    hsq_ = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) hsq_ += ample_[static_cast<size_t>(i)] * gram_[static_cast<size_t>(i) * rank_ + j] * ample_[static_cast<size_t>(j)];
    if (hsq_ <= 0) throw std::invalid_argument("NSLattice: (H,H) must be positive");
    n_ = hsq_ / 2;
}

NSLattice NSLattice::rank1(const Int& n) {
    if (n <= 0) throw std::invalid_argument("NSLattice::rank1: n must be positive");
    return NSLattice(1, {Int(2 * n)}, {Int(1)});
}

NSClass NSLattice::ample() const {
    NSClass h = NSClass::zero(rank_);
    for (int i = 0; i < rank_; ++i) h.coords[static_cast<size_t>(i)] = Rat(ample_[static_cast<size_t>(i)]);
    return h;
}

Rat NSLattice::pair(const NSClass& a, const NSClass& b) const {
    check_rank(a, *this, "NSLattice::pair");
    check_rank(b, *this, "NSLattice::pair");
    Rat out = 0;
    for (int i = 0; i < rank_; ++i) {
        if (a.coords[static_cast<size_t>(i)] == 0) continue;
        Rat row = 0;
        for (int j = 0; j < rank_; ++j) row += Rat(gram_[static_cast<size_t>(i) * rank_ + j]) * b.coords[static_cast<size_t>(j)];
        out += a.coords[static_cast<size_t>(i)] * row;
    }
    return out;
}

Rat NSLattice::deg(const NSClass& a) const { return pair(a, ample()); }

MukaiVector operator+(const MukaiVector& x, const MukaiVector& y) {
    return MukaiVector(Rat(x.r + y.r), x.c1 + y.c1, Rat(x.a + y.a));
}

MukaiVector operator-(const MukaiVector& x, const MukaiVector& y) {
    return MukaiVector(Rat(x.r - y.r), x.c1 - y.c1, Rat(x.a - y.a));
}

MukaiVector operator-(const MukaiVector& x) { return MukaiVector(Rat(-x.r), -x.c1, Rat(-x.a)); }

MukaiVector operator*(const Rat& s, const MukaiVector& x) { return MukaiVector(Rat(s * x.r), s * x.c1, Rat(s * x.a)); }

std::string to_string(const MukaiVector& v) {
    std::ostringstream os;
    os << "(" << rat_str(v.r) << ", [";
    for (int i = 0; i < v.c1.rank(); ++i) {
        if (i) os << ",";
        os << rat_str(v.c1.coords[static_cast<size_t>(i)]);
    }
    os << "], " << rat_str(v.a) << ")";
    return os.str();
}

Rat pairing(const MukaiVector& x, const MukaiVector& y, const NSLattice& lat) {
    return Rat(lat.pair(x.c1, y.c1) - x.r * y.a - x.a * y.r);
}

MukaiVector dual(const MukaiVector& x) { return MukaiVector(x.r, -x.c1, x.a); }

MukaiVector mukai_tensor(const MukaiVector& x, const MukaiVector& y, const NSLattice& lat, Surface kind) {
    Rat r = x.r * y.r;
    NSClass c1 = x.r * y.c1 + y.r * x.c1;
    Rat a = x.r * y.a + y.r * x.a + lat.pair(x.c1, y.c1) - Rat(epsilon(kind)) * r;
    return MukaiVector(std::move(r), std::move(c1), std::move(a));
}

MukaiVector exp_class(const NSClass& L, const NSLattice& lat) {
    check_rank(L, lat, "exp_class");
    return MukaiVector(Rat(1), L, Rat(lat.square(L) / 2));
}

MukaiVector line_bundle_vector(const NSClass& L, const NSLattice& lat, Surface kind) {
    MukaiVector v = exp_class(L, lat);
    v.a += epsilon(kind);
    return v;
}

MukaiVector twist(const MukaiVector& v, const NSClass& L, const NSLattice& lat) {
    check_rank(L, lat, "twist");
    check_rank(v.c1, lat, "twist");
    return MukaiVector(v.r, v.c1 + v.r * L, Rat(v.a + lat.pair(v.c1, L) + v.r * lat.square(L) / 2));
}

MukaiVector from_chern(const Rat& r, const NSClass& c1, const Rat& ch2, Surface kind) {
    return MukaiVector(r, c1, Rat(ch2 + Rat(epsilon(kind)) * r));
}

ChernData to_chern(const MukaiVector& v, Surface kind) {
    return ChernData{v.r, v.c1, Rat(v.a - Rat(epsilon(kind)) * v.r)};
}

bool is_isotropic(const MukaiVector& v, const NSLattice& lat) { return pairing(v, v, lat) == 0; }

bool is_primitive(const MukaiVector& v) {
    if (!v.is_integral()) throw std::invalid_argument("is_primitive: vector is not integral");
    Int g = gcd_int(v.r.get_num(), v.a.get_num());
    for (const Rat& c : v.c1.coords) g = gcd_int(g, c.get_num());
    return g == 1;
}

MukaiVector structure_sheaf_vector(const NSLattice& lat, Surface kind) {
    return MukaiVector(Rat(1), NSClass::zero(lat.rank()), Rat(epsilon(kind)));
}

MukaiVector point_class(const NSLattice& lat) { return MukaiVector(Rat(0), NSClass::zero(lat.rank()), Rat(1)); }

Rat slope(const MukaiVector& v, const NSLattice& lat) {
    if (v.r == 0) throw std::domain_error("slope: rank is zero");
    return Rat(lat.deg(v.c1) / v.r);
}

}  // namespace mukai
