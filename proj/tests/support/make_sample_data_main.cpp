// Regenerates data/sample_market.csv. Run after changing the synthetic
// generator; the unit suite checks the bundled file against the generator.
#include <fstream>
#include <iostream>

#include "synthetic.hpp"
#include "volclust/csv.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_sample_data <output.csv>\n";
        return 2;
    }
    const auto series = volclust::testing::synthetic_market_series(
        "SAMPLE", volclust::testing::kSampleDays, volclust::testing::kSampleSeed);
    std::ofstream out(argv[1], std::ios::binary | std::ios::trunc);
    if (!out) {
        std::cerr << "cannot write " << argv[1] << "\n";
        return 1;
    }
    out << volclust::to_price_csv(series);
    return 0;
}
