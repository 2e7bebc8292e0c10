#include "vkbr/fixtures.hpp"

namespace vkbr::fixtures {

const std::string_view kVirtualTrefoil =
    "X a c b f o=3\n"
    "X c e d b o=3\n"
    "X e d f a o=1\n";

const std::string_view kGenusOneRibbon =
    "V v1 : a1 c1 b1 c2\n"
    "V v2 : a2 b2\n"
    "E a : a1 a2\n"
    "E b : b1 b2\n"
    "E c : c1 c2\n";

const std::string_view kVirtualHopf = "X p q p q o=1\n";

const std::string_view kUnknot = "O 1\n";
const std::string_view kTwoLoops = "O 2\n";

const std::string_view kTrefoil =
    "X 1 5 2 4 o=3\n"
    "X 3 1 4 6 o=3\n"
    "X 5 3 6 2 o=3\n";

}  // namespace vkbr::fixtures
