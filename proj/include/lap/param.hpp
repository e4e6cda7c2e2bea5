#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lap/exact.hpp"

namespace lap {

enum class Duality { Orthogonal, Symplectic, NotSelfDual };

struct Label {
    std::string name;
    int dim = 1;
    Duality duality = Duality::Orthogonal;
    std::string dual_name;  // empty means self-dual

    const std::string& partner() const { return dual_name.empty() ? name : dual_name; }
    bool operator==(const Label&) const = default;
};

inline const std::string kChiV = "chi_V";
inline const std::string kChiW = "chi_W";

Label chi_label(const std::string& name);

struct Summand {
    std::string rho;
    Rational x;
    int a = 1;
    int b = 1;

    auto key() const { return std::tie(rho, x, a, b); }
    bool operator==(const Summand& o) const { return key() == o.key(); }
    bool operator<(const Summand& o) const { return key() < o.key(); }
};

// (rho, A, B, zeta) with A = (a+b)/2 - 1, B = |a-b|/2, zeta = sign(a-b) and zeta = +1 when a = b.
struct JordanBlock {
    std::string rho;
    HalfInt A;
    HalfInt B;
    int zeta = 1;

    static JordanBlock from_ab(const std::string& rho, int a, int b);
    int a() const { return static_cast<int>((A + (zeta > 0 ? B : -B)).to_int() + 1); }
    int b() const { return static_cast<int>((A - (zeta > 0 ? B : -B)).to_int() + 1); }
    int length() const { return static_cast<int>((A - B).to_int() + 1); }
    bool operator==(const JordanBlock&) const = default;
};

enum class GroupKind { Sp, O };

struct GroupContext {
    GroupKind kind = GroupKind::Sp;
    int dual_dim = 1;
    int epsilon = 1;  // only meaningful for O

    int sign_target() const { return kind == GroupKind::Sp ? 1 : epsilon; }
    Duality standard_type() const { return Duality::Orthogonal; }
    bool operator==(const GroupContext&) const = default;
};

struct ArthurParameter {
    GroupContext group;
    std::vector<Label> labels;
    std::vector<Summand> summands;

    const Label& label(const std::string& name) const;
    bool has_label(const std::string& name) const;
    int dimension() const;

    // Sorted summands; node identity in graphs.
    ArthurParameter canonical() const;
    bool same_as(const ArthurParameter& o) const;
    std::string summary() const;
};

struct ValidationError : std::runtime_error {
    std::string field;
    ValidationError(std::string f, const std::string& msg)
        : std::runtime_error(f + ": " + msg), field(std::move(f)) {}
};

struct UnpairedSummand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Duality summand_type(const Label& rho, int a, int b);
bool is_self_dual_summand(const ArthurParameter& p, const Summand& s);
bool is_good_parity_summand(const ArthurParameter& p, const Summand& s);
bool is_good_parity(const ArthurParameter& p);

struct Decomposition {
    std::vector<Summand> nu_pos;
    std::vector<Summand> np;
    std::vector<Summand> gp;
};
Decomposition decompose(const ArthurParameter& p);
std::vector<Summand> reassemble(const ArthurParameter& p, const Decomposition& d);

ArthurParameter dual(const ArthurParameter& p);

// a rows by b columns, entry (r, c) = (a-b)/2 + x - r + c with zero-based r, c.
std::vector<std::vector<Rational>> multisegment_matrix(const Summand& s);

void validate(const ArthurParameter& p);

// Good-parity summands of one label as Jordan blocks, keyed by summand index.
std::map<std::string, std::vector<std::pair<int, JordanBlock>>> gp_blocks(const ArthurParameter& p);

std::string duality_name(Duality d);
Duality parse_duality(const std::string& s);

}  // namespace lap
