// Barcodes of the two-cell-per-dimension sphere in all four flavours.

#include <iostream>

#include "persista/persista.hpp"
#include "persista/verify/fixtures.hpp"

int main() {
    using namespace persista;
    const Filtration s2 = parse_filtration(fixtures::s2_cwf_text(), Format::cwf);
    const StandardBarcodes all = standard_barcodes(s2, PrimeField(2));

    std::cout << "absolute homology\n" << write_barcode_tsv(all.absolute_homology);
    std::cout << "relative homology\n" << write_barcode_tsv(all.relative_homology);
    const std::string mismatch = check_absolute_relative(all.absolute_homology, all.relative_homology);
    std::cout << (mismatch.empty() ? "correspondence holds" : mismatch) << '\n';
}
