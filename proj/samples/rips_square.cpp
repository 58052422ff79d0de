// Rips filtration of the unit square; the loop lives on [1, sqrt 2).

#include <iostream>

#include "persista/persista.hpp"

int main() {
    using namespace persista;
    const PointCloud square = PointCloud::parse("0 0\n1 0\n1 1\n0 1\n");
    const Filtration rips = build_rips(square, 2, 2.0);
    std::cout << rips.size() << " cells\n";
    for (const Interval& i : barcode_absolute_homology(rips, PrimeField(2)).in_dimension(1))
        std::cout << describe(i) << '\n';
}
