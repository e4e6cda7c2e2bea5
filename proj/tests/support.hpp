#pragma once

#include <string>

#include "lap/corpus.hpp"
#include "lap/io.hpp"

namespace lap::test {

inline Block blk(int id, int A2, int B2, int zeta, int l = 0, int eta = 1) {
    return Block{id, HalfInt::from_twice(A2), HalfInt::from_twice(B2), zeta, l, eta};
}

inline std::string fixture(const std::string& rel) { return std::string(LAP_FIXTURE_DIR) + "/" + rel; }

inline ArthurParameter load_param(const std::string& rel) { return parameter_from_json(read_json_file(fixture(rel))); }
inline MoeglinDatum load_datum(const std::string& rel) { return datum_from_json(read_json_file(fixture(rel))); }

inline MoeglinDatum with_blocks(const ArthurParameter& p, const BlockList& bl) {
    MoeglinDatum d{p, {{kChiV, bl}}};
    return d;
}

}  // namespace lap::test
