#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "persista/homology/betti.hpp"
#include "persista/homology/components.hpp"
#include "persista/homology/excision.hpp"
#include "persista/homology/integer.hpp"
#include "persista/homology/les.hpp"
#include "persista/homology/subdivision.hpp"
#include "persista/verify/fixtures.hpp"
#include "persista/verify/generators.hpp"

using namespace persista;

namespace {

const PrimeField F2(2), F3(3), F5(5);

SimplicialComplex closure(std::vector<Simplex> s) { return SimplicialComplex::closure(s); }

BettiVector betti(std::initializer_list<std::size_t> b) { return BettiVector{std::vector<std::size_t>(b)}; }

} // namespace

TEST_CASE("Betti numbers of spheres, disks and points") {
    CHECK(betti_numbers(fixtures::sphere(2), F2) == betti({1, 0, 1}));
    CHECK(betti_numbers(fixtures::full_simplex(2), F2) == betti({1, 0, 0}));
    CHECK(betti_numbers(fixtures::disjoint_points(3), F5)[0] == 3);
    CHECK(betti_numbers(SimplicialComplex{}, F2) == betti({}));
}

TEST_CASE("integer homology of the square, the tetrahedron boundary and RP2") {
    const auto square = closure({Simplex{0, 1}, Simplex{1, 2}, Simplex{2, 3}, Simplex{0, 3}});
    IntegerHomology h = integer_homology(square);
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == 1);
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[1].empty());

    h = integer_homology(fixtures::sphere(2));
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == 0);
    CHECK(h.betti[2] == 1);

    h = integer_homology(fixtures::rp2());
    CHECK(h.betti[0] == 1);
    CHECK(h.betti[1] == 0);
    CHECK(h.betti[2] == 0);
    CHECK(h.torsion[0].empty());
    CHECK(h.torsion[1] == std::vector<std::int64_t>{2});
    CHECK(h.torsion[2].empty());
}

TEST_CASE("RP2 fixture is a closed pseudomanifold with the expected field homology") {
    const SimplicialComplex rp2 = fixtures::rp2();
    CHECK(rp2.f_vector() == std::vector<std::size_t>{6, 15, 10});
    for (const Simplex& e : rp2.simplices_of_dimension(1)) {
        int cofaces = 0;
        for (const Simplex& t : rp2.simplices_of_dimension(2))
            cofaces += e.is_face_of(t);
        CHECK(cofaces == 2);
    }
    CHECK(betti_numbers(rp2, F2) == betti({1, 1, 1}));
    CHECK(betti_numbers(rp2, F3) == betti({1, 0, 0}));
    // Field Betti = integer Betti + torsion divisible by p in degrees d and d-1.
    const IntegerHomology h = integer_homology(rp2);
    for (std::uint32_t p : {2u, 3u}) {
        const BettiVector b = betti_numbers(rp2, PrimeField(p));
        for (std::size_t d = 0; d < 3; ++d) {
            std::size_t expected = h.betti[d];
            for (std::int64_t t : h.torsion[d])
                expected += t % p == 0;
            if (d > 0)
                for (std::int64_t t : h.torsion[d - 1])
                    expected += t % p == 0;
            CHECK(b[d] == expected);
        }
    }
}

TEST_CASE("classical integer homology fixtures") {
    for (int d = 1; d <= 3; ++d) {
        const IntegerHomology h = integer_homology(fixtures::sphere(d));
        for (int k = 0; k <= d; ++k) {
            CHECK(h.betti[static_cast<std::size_t>(k)] == (k == 0 || k == d ? 1u : 0u));
            CHECK(h.torsion[static_cast<std::size_t>(k)].empty());
        }
    }
    const IntegerHomology disk = integer_homology(fixtures::full_simplex(3));
    CHECK(disk.betti == std::vector<std::size_t>{1, 0, 0, 0, 0});
    for (int p = 1; p <= 5; ++p)
        CHECK(integer_homology(fixtures::disjoint_points(p)).betti[0] == static_cast<std::size_t>(p));
}

TEST_CASE("connected components") {
    const auto two = closure({Simplex{0, 1, 2}, Simplex{3, 4, 5}});
    CHECK(connected_components(two).count() == 2);
    CHECK(connected_components(SimplicialComplex{}).count() == 0);
    CHECK(connected_components(closure({Simplex{0, 1}, Simplex{1, 2}})).count() == 1);
}

TEST_CASE("chain index and null-homologous chains") {
    SimplexChain c;
    c.add_term(Simplex{1}, 1);
    c.add_term(Simplex{0}, -1);
    const auto edge = closure({Simplex{0, 1}});
    CHECK(chain_index(c) == 0);
    CHECK(is_null_homologous(c, edge));
    CHECK(index_criterion_holds(c, edge));

    SimplexChain twice;
    twice.add_term(Simplex{0}, 2);
    CHECK(chain_index(twice) == 2);
    CHECK_FALSE(is_null_homologous(twice, SimplicialComplex{Simplex{0}}));
    CHECK(index_criterion_holds(twice, SimplicialComplex{Simplex{0}}));

    SimplexChain apart;
    apart.add_term(Simplex{0}, 1);
    apart.add_term(Simplex{1}, -1);
    const SimplicialComplex points = fixtures::disjoint_points(2);
    CHECK(chain_index(apart) == 0);
    CHECK_FALSE(is_null_homologous(apart, points));
    CHECK_THROWS_AS(index_criterion_holds(apart, points), DisconnectedError);
}

TEST_CASE("index criterion on random connected complexes") {
    verify::Rng rng(31);
    int checked_cases = 0;
    for (int t = 0; t < 100; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {6, 2, 20});
        if (connected_components(x).count() != 1)
            continue;
        SimplexChain c;
        for (Vertex v : x.vertices())
            c.add_term(Simplex{v}, rng.between(-2, 2));
        CHECK(index_criterion_holds(c, x));
        ++checked_cases;
    }
    CHECK(checked_cases > 10);
}

TEST_CASE("relative Betti numbers") {
    const SimplicialComplex disk = fixtures::full_simplex(2);
    const SimplicialComplex circle = fixtures::sphere(1);
    CHECK(relative_betti(disk, disk, F2) == betti({}));
    CHECK(relative_betti(disk, SimplicialComplex{}, F2) == betti_numbers(disk, F2));
    CHECK(relative_betti(disk, circle, F2) == betti({0, 0, 1}));
    CHECK_THROWS_AS(relative_betti(circle, disk, F2), NotSubcomplexError);
}

TEST_CASE("long exact sequence of the disk relative to its boundary") {
    const SimplicialComplex disk = fixtures::full_simplex(2);
    const SimplicialComplex circle = fixtures::sphere(1);
    const LesReport rep = les_exactness_check(disk, circle, F2);
    CHECK(rep.exact());
    const PairSequence seq(disk, circle, F2);
    CHECK(rank(seq.connecting(1), F2) == 0);
    CHECK(rank(seq.connecting(2), F2) == 1);
    CHECK(seq.homology_rel(2).dimension() == 1);
    CHECK_THROWS_AS(les_exactness_check(circle, disk, F2), NotSubcomplexError);
}

TEST_CASE("long exact sequence with A = X") {
    const SimplicialComplex x = fixtures::sphere(2);
    const PairSequence seq(x, x, F5);
    for (int d = 0; d <= 2; ++d) {
        const DenseMatrix inc = seq.inclusion(d);
        CHECK(inc.rows() == inc.cols());
        CHECK(rank(inc, F5) == inc.rows());
        CHECK(seq.homology_rel(d).dimension() == 0);
    }
    CHECK(les_exactness_check(x, x, F5).exact());
}

TEST_CASE("exactness on random pairs") {
    verify::Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {6, 3, 30});
        const SimplicialComplex a = verify::random_subcomplex(rng, x);
        CHECK(les_exactness_check(x, a, F2).exact());
        CHECK(les_exactness_check(x, a, F5).exact());
    }
}

TEST_CASE("sequence nodes of the disk pair") {
    const LesReport rep = les_exactness_check(fixtures::full_simplex(2), fixtures::sphere(1), F2);
    std::size_t rel2 = 0, a1 = 0;
    for (const LesNode& n : rep.nodes) {
        if (n.group == "H(X,A)" && n.dim == 2)
            rel2 = n.dimension;
        if (n.group == "H(A)" && n.dim == 1)
            a1 = n.dimension;
        CHECK(n.composite_zero);
    }
    CHECK(rel2 == 1);
    CHECK(a1 == 1);
}

TEST_CASE("connecting map does not depend on the lift") {
    verify::Rng rng(41);
    for (int t = 0; t < 40; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {6, 3, 30});
        const SimplicialComplex a = verify::random_subcomplex(rng, x);
        const PairSequence seq(x, a, F5);
        const ChainComplex ca = simplicial_chain_complex(a);
        for (int d = 1; d <= x.dimension(); ++d) {
            std::vector<FieldVector> shift;
            for (std::size_t k = 0; k < seq.homology_rel(d).dimension(); ++k) {
                FieldVector v(ca.cells(d), 0);
                for (auto& e : v)
                    e = static_cast<FieldElement>(rng.below(5));
                shift.push_back(v);
            }
            CHECK(seq.connecting(d) == seq.connecting(d, shift));
        }
    }
}

TEST_CASE("excision on the tetrahedron boundary") {
    const SimplicialComplex x = fixtures::sphere(2);
    const auto upper = closure({Simplex{0, 1, 2}, Simplex{0, 1, 3}});
    const auto lower = closure({Simplex{0, 2, 3}, Simplex{1, 2, 3}});
    const ExcisionReport r = excision_check(x, upper, lower, F2);
    CHECK(r.ok());
    // H_2(lower, circle) = F: the induced map hits the fundamental class.
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[2].excised == 1);
    CHECK(r.rows[2].full == 1);
    CHECK(r.rows[2].map_rank == 1);
    CHECK(excision_check(x, upper, x, F2).ok());
    CHECK_THROWS_AS(excision_check(x, upper, upper, F2), CoverError);
}

TEST_CASE("excision on random covers") {
    verify::Rng rng(43);
    for (int t = 0; t < 50; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {7, 3, 30});
        const verify::Cover cov = verify::random_cover(rng, x);
        CHECK(excision_check(x, cov.a, cov.b, F2).ok());
        CHECK(excision_check(x, cov.a, cov.b, F5).ok());
    }
}

TEST_CASE("barycentric subdivision counts") {
    const Subdivision edge = barycentric_subdivision(closure({Simplex{0, 1}}));
    CHECK(edge.complex.f_vector() == std::vector<std::size_t>{3, 2});
    const Subdivision tri = barycentric_subdivision(fixtures::full_simplex(2));
    CHECK(tri.complex.f_vector() == std::vector<std::size_t>{7, 12, 6});
    CHECK(validate_complex(tri.complex).ok());
}

TEST_CASE("subdivision of the equilateral triangle") {
    const GeometricSubdivision sd = barycentric_subdivide(fixtures::equilateral_triangle());
    CHECK(sd.diameter_before == Catch::Approx(1.0).margin(1e-15));
    CHECK(std::abs(sd.diameter_after - std::sqrt(3.0) / 3) <= 1e-12);
    CHECK(sd.diameter_after <= 2.0 / 3);
    CHECK(sd.within_bound());
}

TEST_CASE("iterated subdivision shrinks the mesh") {
    GeometricComplex g = fixtures::equilateral_triangle();
    double diameter = mesh_diameter(g);
    for (int r = 0; r < 3; ++r) {
        GeometricSubdivision sd = barycentric_subdivide(g);
        CHECK(sd.within_bound());
        CHECK(sd.diameter_after < diameter);
        diameter = sd.diameter_after;
        g = std::move(sd.complex);
    }
    CHECK(diameter <= std::pow(2.0 / 3, 3) + 1e-12);
}

TEST_CASE("Betti numbers survive subdivision") {
    verify::Rng rng(47);
    for (int t = 0; t < 50; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {5, 3, 31});
        const SimplicialComplex sd = barycentric_subdivide(x);
        CHECK(betti_numbers(x, F2) == betti_numbers(sd, F2));
        CHECK(betti_numbers(x, F5) == betti_numbers(sd, F5));
    }
}

TEST_CASE("universal coefficients over a field") {
    CHECK(uct_field_check(fixtures::sphere(2), F2).ok());
    CHECK(uct_field_check(SimplicialComplex{}, F2).ok());
    for (const UctRow& r : uct_field_check(SimplicialComplex{}, F2).rows)
        CHECK(r.homology == 0);
    for (std::uint32_t p : {2u, 3u}) {
        const UctReport rep = uct_field_check(fixtures::rp2(), PrimeField(p));
        CHECK(rep.ok());
        const std::size_t expect = p == 2 ? 1 : 0;
        CHECK(rep.rows[1].cohomology == expect);
        CHECK(rep.rows[2].cohomology == expect);
    }
}

TEST_CASE("Betti numbers add over components and match the Euler characteristic") {
    verify::Rng rng(53);
    for (int t = 0; t < 60; ++t) {
        const SimplicialComplex x = verify::random_complex(rng, {8, 3, 30});
        for (const PrimeField& f : {F2, F5}) {
            const BettiVector whole = betti_numbers(x, f);
            std::vector<std::size_t> sum(whole.size() + 1, 0);
            for (const SimplicialComplex& part : component_subcomplexes(x)) {
                const BettiVector b = betti_numbers(part, f);
                for (std::size_t d = 0; d < b.size() && d < sum.size(); ++d)
                    sum[d] += b[d];
            }
            CHECK(whole == BettiVector{sum});
            CHECK(whole[0] == connected_components(x).count());
            std::int64_t chi = 0;
            const auto fv = x.f_vector();
            for (std::size_t d = 0; d < fv.size(); ++d)
                chi += (d % 2 ? -1 : 1) * static_cast<std::int64_t>(fv[d]);
            CHECK(whole.euler_characteristic() == chi);
        }
        CHECK(integer_homology(x).betti[0] == connected_components(x).count());
    }
}
