#include <doctest.h>

#include <png.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "entrex/image_io.hpp"
#include "entrex/report_io.hpp"
#include "entrex/sweep.hpp"
#include "support/synthetic.hpp"

using namespace entrex;
namespace ts = entrex::testsupport;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "entrex_io_tests";
    fs::create_directories(dir);
    return dir;
}

void write_16bit_png(const fs::path& path) {
    std::FILE* fp = std::fopen(path.string().c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    png_init_io(png, fp);
    png_set_IHDR(png, info, 2, 2, 16, PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<std::uint16_t> row(2 * 3, 0x1234);
    for (int y = 0; y < 2; ++y) {
        png_write_row(png, reinterpret_cast<png_bytep>(row.data()));
    }
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

void write_grey_png(const fs::path& path, std::uint8_t v00, std::uint8_t v10) {
    std::FILE* fp = std::fopen(path.string().c_str(), "wb");
    REQUIRE(fp != nullptr);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png_create_info_struct(png);
    png_init_io(png, fp);
    png_set_IHDR(png, info, 2, 1, 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
                 PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::uint8_t row[2] = {v00, v10};
    png_write_row(png, row);
    png_write_end(png, info);
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
}

}  // namespace

TEST_CASE("ppm round trip") {
    const fs::path dir = temp_dir();
    SUBCASE("known bytes survive exactly") {
        ImageRgb8 img(2, 2);
        for (std::size_t i = 0; i < img.data.size(); ++i) {
            img.data[i] = static_cast<std::uint8_t>(17 * i + 3);
        }
        const fs::path path = dir / "roundtrip.ppm";
        save_image(img, path.string());
        CHECK(load_image(path.string()) == img);
    }
    SUBCASE("random images survive, overwriting is allowed") {
        std::mt19937 rng(40);
        const fs::path path = dir / "overwrite.ppm";
        for (int iter = 0; iter < 3; ++iter) {
            const ImageRgb8 img = ts::random_image(rng, 9, 5);
            save_image(img, path.string());
            CHECK(load_image(path.string()) == img);
        }
    }
    SUBCASE("header comments are skipped") {
        const fs::path path = dir / "comments.ppm";
        std::ofstream out(path, std::ios::binary);
        out << "P6\n# a comment\n2 1\n# another\n255\n";
        const char pixels[6] = {1, 2, 3, 4, 5, 6};
        out.write(pixels, 6);
        out.close();
        const ImageRgb8 img = load_image(path.string());
        CHECK(img.width == 2);
        CHECK(img.at(1, 0, 2) == 6);
    }
    SUBCASE("truncated pixel data names the file") {
        const fs::path path = dir / "truncated.ppm";
        std::ofstream out(path, std::ios::binary);
        out << "P6\n4 4\n255\n";
        out.write("abc", 3);
        out.close();
        try {
            load_image(path.string());
            FAIL("expected IoError");
        } catch (const IoError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("truncated.ppm") != std::string::npos);
            CHECK(msg.find("truncated") != std::string::npos);
        }
    }
    SUBCASE("16-bit maxval is rejected") {
        const fs::path path = dir / "deep.ppm";
        std::ofstream out(path, std::ios::binary);
        out << "P6\n1 1\n65535\n";
        out.write("abcdef", 6);
        out.close();
        CHECK_THROWS_AS(load_image(path.string()), IoError);
    }
}

TEST_CASE("png round trip and decoding") {
    const fs::path dir = temp_dir();
    SUBCASE("rgb round trip") {
        std::mt19937 rng(41);
        const ImageRgb8 img = ts::random_image(rng, 13, 7);
        const fs::path path = dir / "roundtrip.png";
        save_image(img, path.string());
        CHECK(load_image(path.string()) == img);
    }
    SUBCASE("greyscale is expanded to rgb") {
        const fs::path path = dir / "grey.png";
        write_grey_png(path, 10, 200);
        const ImageRgb8 img = load_image(path.string());
        REQUIRE(img.width == 2);
        for (int c = 0; c < 3; ++c) {
            CHECK(img.at(0, 0, c) == 10);
            CHECK(img.at(1, 0, c) == 200);
        }
    }
    SUBCASE("16-bit depth is rejected with the reason") {
        const fs::path path = dir / "deep.png";
        write_16bit_png(path);
        try {
            load_image(path.string());
            FAIL("expected IoError");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find("16-bit") != std::string::npos);
        }
    }
}

TEST_CASE("load/save error paths") {
    const fs::path dir = temp_dir();
    SUBCASE("missing file") {
        try {
            load_image((dir / "missing.png").string());
            FAIL("expected IoError");
        } catch (const IoError& e) {
            CHECK(std::string(e.what()).find("missing.png") != std::string::npos);
        }
    }
    SUBCASE("unknown input format") {
        const fs::path path = dir / "garbage.bin";
        std::ofstream(path, std::ios::binary) << "not an image";
        CHECK_THROWS_AS(load_image(path.string()), IoError);
    }
    SUBCASE("unknown output extension") {
        CHECK_THROWS_AS(save_image(ts::constant_image(2, 2, 0, 0, 0), (dir / "x.jpg").string()),
                        IoError);
    }
    SUBCASE("unwritable path") {
        CHECK_THROWS_AS(
            save_image(ts::constant_image(2, 2, 0, 0, 0), (dir / "no/such/dir/x.png").string()),
            IoError);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_fixed9(0.0) == "0.000000000");
    CHECK(format_fixed9(5.833759745468654) == "5.833759745");
    CHECK(format_fixed9(-0.25) == "-0.250000000");
    CHECK(format_shortest(1.2) == "1.2");
    CHECK(format_shortest(0.6) == "0.6");
    CHECK(format_shortest(2.0) == "2");
}

TEST_CASE("csv escaping") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("with,comma") == "\"with,comma\"");
    CHECK(csv_field("with\"quote") == "\"with\"\"quote\"");
}

TEST_CASE("curve csv layout") {
    EntropyCurve a{{0.0, 0.05, 0.1}, {1.0, 2.0, 3.0}};
    EntropyCurve b{{0.0, 0.05, 0.1}, {4.0, 5.0, 6.0}};
    std::ostringstream os;
    write_curve_csv(os, {{"first", &a}, {"second", &b}});
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "kappa,first,second");
    std::getline(is, line);
    CHECK(line == "0.000000000,1.000000000,4.000000000");
    std::getline(is, line);
    CHECK(line == "0.050000000,2.000000000,5.000000000");
    std::getline(is, line);
    CHECK(line == "0.100000000,3.000000000,6.000000000");
    CHECK(!std::getline(is, line));

    EntropyCurve mismatched{{0.0, 0.1}, {1.0, 2.0}};
    std::ostringstream sink;
    CHECK_THROWS_AS(write_curve_csv(sink, {{"a", &a}, {"m", &mismatched}}),
                    std::invalid_argument);
}

TEST_CASE("report json round trip") {
    const ImageRgb8 img = ts::make_foggy_fixture(40, 28, 5);
    GridSpec g;
    g.levels = {RetinexLevel::uniform, RetinexLevel::low};
    g.scales = {16};
    g.scale_divisions = {2};
    g.dynamics = {0.6, 1.2};
    g.kappa_steps = 5;
    const SweepReport report = run_sweep(img, g);

    std::ostringstream first;
    write_report_json(first, g, report);
    std::istringstream in(first.str());
    const auto [g2, report2] = read_report_json(in);

    CHECK(report2 == report);
    CHECK(g2.levels == g.levels);
    CHECK(g2.scales == g.scales);
    CHECK(g2.scale_divisions == g.scale_divisions);
    CHECK(g2.dynamics == g.dynamics);
    CHECK(g2.kappa_max == g.kappa_max);
    CHECK(g2.kappa_steps == g.kappa_steps);

    std::ostringstream second;
    write_report_json(second, g2, report2);
    CHECK(second.str() == first.str());
}
