#pragma once

#include "mtw/tree.hpp"

// STAR3: three legs of lengths 1, 2, 3 meeting at c
inline mtw::MetricTree star3() {
    using mtw::Rat;
    return mtw::MetricTree({{"c", "u", Rat(1)}, {"c", "v", Rat(2)}, {"c", "w", Rat(3)}});
}

// PATH2: a single edge of length 2
inline mtw::MetricTree path2() {
    return mtw::MetricTree({{"u", "v", mtw::Rat(2)}});
}
