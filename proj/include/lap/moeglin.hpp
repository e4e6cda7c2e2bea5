#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lap/param.hpp"

namespace lap {

struct Block {
    int id = 0;
    HalfInt A;
    HalfInt B;
    int zeta = 1;
    int l = 0;
    int eta = 1;

    int d() const { return static_cast<int>((A - B).to_int() + 1); }
    bool same_interval(const Block& o) const { return A == o.A && B == o.B; }
    bool operator==(const Block&) const = default;
};

using BlockList = std::vector<Block>;  // bottom to top

struct InvalidExchange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DatumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// u has to sit above v in every admissible order.
bool must_above(const Block& u, const Block& v);
bool admissible(const BlockList& bl);
// [x.B, x.A] contained in [y.B, y.A]
bool inside(const Block& x, const Block& y);

// Throws InvalidExchange when l is out of range; sets eta = +1 when 2l = d.
void check_l(Block& b);

BlockList row_exchange(const BlockList& bl, size_t k);
BlockList normalize_order(const BlockList& bl, const std::vector<int>& target_ids);

// Sort by (A+B, A-B), zeta = +1 first on ties.
BlockList canonical_order(BlockList bl);

int sign_product(const BlockList& bl);

struct MoeglinDatum {
    ArthurParameter param;
    // Good-parity blocks per label, bottom to top; ids are summand indices of param.
    std::map<std::string, BlockList> blocks;

    int sign_product() const;
    const BlockList& of(const std::string& rho) const;
    std::string summary() const;
};

// Builds blocks of the good-parity part in canonical order with l = 0, eta = +1.
MoeglinDatum base_datum(const ArthurParameter& p);

// Checks order admissibility, l bounds, the sign condition and block/summand agreement.
void validate_datum(const MoeglinDatum& d);

std::vector<MoeglinDatum> enumerate_data(const ArthurParameter& p);
// All valid (l, eta) assignments on a single block list, sign product equal to target.
std::vector<BlockList> enumerate_assignments(const BlockList& shape, int target);

MoeglinDatum row_exchange(const MoeglinDatum& d, const std::string& rho, size_t k);
MoeglinDatum normalize_order(const MoeglinDatum& d, const std::map<std::string, std::vector<int>>& target);

// All admissible orders of bl that differ as sequences of intervals; identical blocks keep their relative order.
std::vector<BlockList> admissible_orders(const BlockList& bl, size_t cap = 0);

}  // namespace lap
