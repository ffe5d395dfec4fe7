#include <seifert_wrt/report.hpp>

#include <gtest/gtest.h>

using namespace swrt;

namespace
{

RunConfig small_config(Mode mode, OutputFormat format)
{
    RunConfig c;
    c.fibers = {2, 3, 5, 7};
    c.rows = {10, 11};
    c.mode = mode;
    c.output_format = format;
    c.digits = 8;
    return c;
}

} // namespace

TEST(Rows, Parsing)
{
    EXPECT_EQ(parse_rows("10..14"), (std::vector<long>{10, 11, 12, 13, 14}));
    EXPECT_EQ(parse_rows("10,100"), (std::vector<long>{10, 100}));
    EXPECT_EQ(parse_rows("10..11,1000"), (std::vector<long>{10, 11, 1000}));
    EXPECT_THROW(parse_rows("14..10"), std::invalid_argument);
    EXPECT_THROW(parse_rows("a"), std::invalid_argument);
    EXPECT_THROW(parse_rows("10x"), std::invalid_argument);
    EXPECT_THROW(parse_rows("0"), std::invalid_argument);
    EXPECT_THROW(parse_rows(""), std::invalid_argument);
}

TEST(Config, Validation)
{
    RunConfig c = small_config(Mode::both, OutputFormat::text);
    EXPECT_NO_THROW(c.validate());
    c.precision_bits = 32;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = small_config(Mode::both, OutputFormat::text);
    c.tail_order = -1;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_EQ(parse_mode("asymptotic"), Mode::asymptotic);
    EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Render, TextHasAllColumns)
{
    const std::string out = render(compute_wrt(small_config(Mode::both, OutputFormat::text)));
    EXPECT_NE(out.find("Sigma(2,3,5,7)"), std::string::npos);
    EXPECT_NE(out.find("(N+2)Z0+Z1"), std::string::npos);
    EXPECT_NE(out.find("0.7396"), std::string::npos);
}

TEST(Render, ExactModeOmitsAsymptoticColumns)
{
    const WrtReport r = compute_wrt(small_config(Mode::exact, OutputFormat::text));
    EXPECT_FALSE(r.rows[0].asym.has_value());
    EXPECT_EQ(render(r).find("Z0"), std::string::npos);
    const WrtReport a = compute_wrt(small_config(Mode::asymptotic, OutputFormat::csv));
    EXPECT_FALSE(a.rows[0].exact.has_value());
    EXPECT_EQ(render(a).substr(0, render(a).find('\n')), "N,asym_re,asym_im,z0_re,z0_im");
}

TEST(Render, CsvHeaderAndRecords)
{
    const std::string out = render(compute_wrt(small_config(Mode::both, OutputFormat::csv)));
    EXPECT_EQ(out.substr(0, out.find('\n')), "N,exact_re,exact_im,exact_err,asym_re,asym_im,z0_re,z0_im,abs_diff");
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 3);
}

TEST(Render, JsonRoundTripReproducesText)
{
    RunConfig c = small_config(Mode::both, OutputFormat::json);
    const WrtReport r = compute_wrt(c);
    const nlohmann::json j = nlohmann::json::parse(render(r));
    ASSERT_TRUE(j.contains("config"));
    ASSERT_EQ(j.at("rows").size(), 2u);
    EXPECT_TRUE(j.at("rows")[0].at("exact").contains("err"));
    WrtReport back = wrt_report_from_json(j);
    EXPECT_EQ(back.config.fibers, c.fibers);
    EXPECT_EQ(back.config.rows, c.rows);
    WrtReport original = r;
    back.config.output_format = OutputFormat::text;
    original.config.output_format = OutputFormat::text;
    EXPECT_EQ(render(back), render(original));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        EXPECT_EQ(mpfr_cmp(back.rows[i].exact->re().get(), r.rows[i].exact->re().get()), 0);
        EXPECT_EQ(mpfr_cmp(back.rows[i].z0->im().get(), r.rows[i].z0->im().get()), 0);
    }
}

TEST(Render, InvariantsAndReps)
{
    const SeifertData s = new_seifert({2, 3, 5, 7});
    const InvariantReport inv = invariant_report(s, 2);
    const std::string text = render(s, inv, OutputFormat::text);
    EXPECT_NE(text.find("gamma = 6"), std::string::npos);
    EXPECT_NE(text.find("lambda_C = -14"), std::string::npos);
    EXPECT_NE(text.find("phi = 949/210"), std::string::npos);
    const auto j = nlohmann::json::parse(render(s, inv, OutputFormat::json));
    EXPECT_EQ(j.at("casson"), "-14");
    const std::string csv = render(s, rep_table(s), OutputFormat::csv);
    EXPECT_NE(csv.find("interior,\"(1,1,1,1)\",247/210,37/105,-529/840"), std::string::npos);
    EXPECT_NE(csv.find("missing,\"(1,1,1,0)\",31/30,,-7/120"), std::string::npos);
}

TEST(Compute, RejectsThreeFibers)
{
    RunConfig c = small_config(Mode::both, OutputFormat::text);
    c.fibers = {2, 3, 5};
    EXPECT_THROW(compute_wrt(c), std::invalid_argument);
    c.fibers = {2, 3, 5, 7};
    c.rows.clear();
    EXPECT_THROW(compute_wrt(c), std::invalid_argument);
}
