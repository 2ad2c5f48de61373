#include "ncres/catalog.hpp"

#include <stdexcept>

namespace ncres {

// Supporting subquivers of the r=4 orbifold, with the numeric labels
// marking the arrows that vanish toward each adjacent toric edge, and the
// bold-vertex sets.  The label sets are forced by the adjacency table: each
// row (g,h,i,j) removes matching arrow sets from the two charts.
const std::vector<Su3FigureChart>& su3_figure_charts() {
    static const std::vector<Su3FigureChart> charts = [] {
        std::vector<Su3FigureChart> v;
        v.push_back({"a1", 0xffffffffULL,
            {0x0ULL, 0x11110000ULL, 0xfULL},
            {}});
        v.push_back({"a2", 0xffff0000ffffULL,
            {0x0ULL, 0x111100000000ULL, 0x8421ULL},
            {}});
        v.push_back({"a3", 0xffffffff0000ULL,
            {0x0ULL, 0x84210000ULL, 0xf00000000ULL},
            {}});
        v.push_back({"b1", 0x2222eeeeffffULL,
            {0x0ULL, 0x222200000000ULL, 0x22220000ULL, 0x22020000000fULL, 0x20002dULL},
            {1, 5, 9, 13}});
        v.push_back({"b2", 0x6666ccccffffULL,
            {0x0ULL, 0x444400000000ULL, 0x44440000ULL, 0x40040000002dULL, 0x4400429ULL},
            {2, 6, 10, 14}});
        v.push_back({"b3", 0xeeee8888ffffULL,
            {0x0ULL, 0x888800000000ULL, 0x88880000ULL, 0x800000429ULL, 0x88808421ULL},
            {3, 7, 11, 15}});
        v.push_back({"c1", 0xffff42187bdeULL,
            {0x0ULL, 0x42180000ULL, 0x111142100000ULL, 0x4218ULL, 0x110900000008ULL},
            {3, 4, 9, 14}});
        v.push_back({"c2", 0xffff639c39c6ULL,
            {0x0ULL, 0x21840000ULL, 0x110921000000ULL, 0x2184ULL, 0x100d00000084ULL},
            {2, 7, 8, 13}});
        v.push_back({"c3", 0xffff7bde1842ULL,
            {0x0ULL, 0x18420000ULL, 0x100d10000000ULL, 0x1842ULL, 0xf00000842ULL},
            {1, 6, 11, 12}});
        v.push_back({"d1", 0xfff0fffff000ULL,
            {0x0ULL, 0xf000ULL, 0xf00000000000ULL, 0x100014210000ULL, 0x8421e000ULL},
            {12, 13, 14, 15}});
        v.push_back({"d2", 0xff0ffffff00ULL,
            {0x0ULL, 0xf00ULL, 0xf0000000000ULL, 0x90011210000ULL, 0x14210600ULL},
            {8, 9, 10, 11}});
        v.push_back({"d3", 0xf0fffffff0ULL,
            {0x0ULL, 0xf0ULL, 0xf000000000ULL, 0xd011110000ULL, 0x11210020ULL},
            {4, 5, 6, 7}});
        v.push_back({"e1", 0x26f2eedeffd2ULL,
            {0x0ULL, 0x9022120000ULL, 0x2002000000d2ULL, 0x4d000100000ULL, 0x260200000002ULL, 0x24420400ULL, 0x4000690ULL},
            {6, 9}});
        v.push_back({"e2", 0xeef6ca9cfbd6ULL,
            {0x0ULL, 0xc80400000004ULL, 0x88848000ULL, 0x1042140000ULL, 0x400000294ULL, 0x8800c210ULL, 0x889002100000ULL},
            {7, 14}});
        v.push_back({"e3", 0xeff2ebdef942ULL,
            {0x0ULL, 0xc90001000000ULL, 0x8000e100ULL, 0x200000942ULL, 0x10021420000ULL, 0x8842c000ULL, 0xe00200000042ULL},
            {11, 13}});
        return v;
    }();
    return charts;
}

const Su3FigureChart& su3_figure_chart(const std::string& name) {
    for (const auto& c : su3_figure_charts())
        if (c.name == name) return c;
    throw std::invalid_argument("su3_figure_chart: unknown chart " + name);
}

} // namespace ncres
