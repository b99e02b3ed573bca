#include <gtest/gtest.h>

#include <sstream>

#include "doubling/matrix_io.hpp"
#include "doubling/numeig.hpp"

using namespace doubling;

TEST(MatrixMarket, KacTwo) {
    std::ostringstream os;
    write_matrix_market(os, sylvester_kac(2).matrix);
    EXPECT_EQ(os.str(),
              "%%MatrixMarket matrix coordinate real general\n3 3 4\n1 2 1\n2 1 2\n2 3 2\n3 2 1\n");
}

TEST(MatrixMarket, SeventeenDigits) {
    std::ostringstream os;
    write_matrix_market(os, symmetrize(sylvester_kac(1).matrix));
    std::istringstream is(os.str());
    auto m = read_matrix_market(is);
    ASSERT_EQ(m.entries.size(), 2u);
    EXPECT_EQ(m.entries[0].v, 1.0);
    std::ostringstream os2;
    write_matrix_market(os2, SymTridiag{{SqrtRational::sqrt(2)}});
    EXPECT_NE(os2.str().find("1.4142135623730951"), std::string::npos);
}

TEST(ExactFormat, RoundTrip) {
    auto m = extended_kac_odd(3, Rational(1, 4), Rational(-3, 7)).matrix;
    std::ostringstream os;
    write_exact(os, m);
    std::istringstream is(os.str());
    EXPECT_EQ(read_exact(is), m);
}

TEST(ExactFormat, Errors) {
    std::istringstream bad_header("size 3 3\n");
    EXPECT_THROW(read_exact(bad_header), ParseError);
    std::istringstream bad_entry("dim 3 3\n1 2 1/x\n");
    try {
        read_exact(bad_entry);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 2u);
    }
    std::istringstream diag("dim 3 3\n1 1 5\n");
    EXPECT_THROW(read_exact(diag), ParseError);
    std::istringstream range("dim 3 3\n4 3 1\n");
    EXPECT_THROW(read_exact(range), ParseError);
}

TEST(ExactFormat, IrrationalSymmetricRejected) {
    EXPECT_THROW(rational_form(symmetrize(sylvester_kac(2).matrix)), Unsupported);
    EXPECT_THROW(rational_form(symmetrize(sylvester_kac(3).matrix)), Unsupported);
    auto r = rational_form(symmetrize(sylvester_kac(1).matrix));
    EXPECT_EQ(r.super[0], Rational(1));
}

TEST(MatrixMarket, NonsymmetricReimportMatchesSpectrum) {
    auto m = nonsymmetric_form(DoubleCase::DualHahnIII, DualHahnParams{3, 3, 6});
    std::ostringstream os;
    write_matrix_market(os, m.matrix);
    std::istringstream is(os.str());
    auto f = symmetrized_tridiag(read_matrix_market(is));
    auto r = sym_tridiag_eigen(f, false);
    auto ref = m.spectrum.to_doubles();
    double scale = f.max_abs_entry();
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(r.values[i], ref[i], 1e-10 * scale);
}

TEST(MatrixMarket, ReaderErrors) {
    std::istringstream no_header("3 3 1\n1 2 1\n");
    EXPECT_THROW(read_matrix_market(no_header), ParseError);
    std::istringstream short_body("%%MatrixMarket matrix coordinate real general\n3 3 2\n1 2 1\n");
    EXPECT_THROW(read_matrix_market(short_body), ParseError);
    std::istringstream sym("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n2 1 -3\n");
    auto m = read_matrix_market(sym);
    EXPECT_EQ(m.entries.size(), 2u);
    std::istringstream neg("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 1\n2 1 -1\n");
    EXPECT_THROW(symmetrized_tridiag(read_matrix_market(neg)), NegativeProduct);
}

TEST(Json, SpectrumAndMatrix) {
    auto k = sylvester_kac(2);
    auto j = to_json(k.spectrum);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0]["sign"], -1);
    EXPECT_EQ(j[0]["radicand"], "4/1");
    EXPECT_EQ(to_json(k.matrix)["dim"], 3);
}
