#pragma once

// Parameter grid and published values of the simulation table this
// tool reproduces: 20 rows over five probability vectors; NS is the
// published sample count, sim_mean the published simulated mean.

#include <vector>

namespace rwords::cli {

struct Table1Row {
    int k;
    const char* probs;
    int N;
    long NS;
    double sim_mean;
};

inline const std::vector<Table1Row>& table1_rows() {
    static const std::vector<Table1Row> rows{
        {2, "5/7,2/7", 50, 20000, 36.37},
        {2, "5/7,2/7", 100, 20000, 72.12},
        {2, "5/7,2/7", 500, 20000, 357.73},
        {2, "6/11,5/11", 50, 20000, 30.54},
        {2, "6/11,5/11", 100, 20000, 58.52},
        {2, "6/11,5/11", 200, 20000, 113.71},
        {2, "6/11,5/11", 400, 20000, 223.16},
        {3, "1/2,5/14,1/7", 50, 10000, 27.53},
        {3, "1/2,5/14,1/7", 100, 10000, 52.79},
        {3, "1/2,5/14,1/7", 500, 10000, 252.80},
        {3, "1/2,5/14,1/7", 1000, 10000, 502.78},
        {3, "3/8,1/3,7/24", 50, 10000, 23.96},
        {3, "3/8,1/3,7/24", 100, 10000, 44.33},
        {3, "3/8,1/3,7/24", 500, 10000, 197.65},
        {3, "3/8,1/3,7/24", 1000, 2000, 386.08},
        {3, "3/8,5/16,5/16", 50, 10000, 23.92},
        {3, "3/8,5/16,5/16", 100, 10000, 44.16},
        {3, "3/8,5/16,5/16", 200, 10000, 83.15},
        {3, "3/8,5/16,5/16", 400, 10000, 159.30},
        {3, "3/8,5/16,5/16", 800, 10000, 310.08},
    };
    return rows;
}

} // namespace rwords::cli
