#pragma once

#include "graycat/fixtures.hpp"
#include "graycat/mapping_space.hpp"

#include <doctest.h>

#include <string>

namespace support {

using namespace graycat;

inline CatPtr share(FiniteGrayCategory c) { return std::make_shared<const FiniteGrayCategory>(std::move(c)); }

inline Cell cell(const FiniteGrayCategory& C, int dim, const std::string& label)
{
    auto i = C.find(dim, label);
    REQUIRE_MESSAGE(i.has_value(), "no ", dim, "-cell ", label, " in ", C.name());
    return {dim, *i};
}

// Fixtures shared across test cases; built once.
struct Fixtures {
    CatPtr one = share(build_walking(0));
    CatPtr w1 = share(build_walking(1));
    CatPtr w2 = share(build_walking(2));
    CatPtr w3 = share(build_walking(3));
    CatPtr bc = share(bc_z2());
    CatPtr bc0 = share(bc_z2(false));
    CatPtr bc4 = share(bc_z4());
    CatPtr chain2 = share(build_chain(2));
    CatPtr s3 = share(build_thin_s3());
};

inline const Fixtures& fx()
{
    static const Fixtures f;
    return f;
}

inline std::string fixture_path(const std::string& name) { return std::string(GRAYCAT_FIXTURE_DIR) + "/" + name; }

} // namespace support
