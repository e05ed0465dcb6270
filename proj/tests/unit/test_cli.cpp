#include "vdl/cli.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace
{
    struct Result
    {
        int code;
        std::string out;
        std::string err;
    };

    Result run(std::vector<std::string> args)
    {
        std::ostringstream out, err;
        const int code = vdl::cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    // Non-comment lines of a CSV payload.
    std::vector<std::string> payload(const std::string &text)
    {
        std::vector<std::string> rows;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty() && line[0] != '#')
                rows.push_back(line);
        return rows;
    }

    std::vector<std::string> split(const std::string &s)
    {
        std::vector<std::string> f;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            f.push_back(item);
        return f;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream f(p);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    }

    std::string config(const char *name) { return std::string(VDL_SOURCE_DIR) + "/configs/" + name; }

    fs::path scratch(const std::string &name)
    {
        const fs::path p = fs::temp_directory_path() / ("vdl_cli_test_" + name);
        fs::remove_all(p);
        return p;
    }
}

TEST_SUITE("cli")
{
    TEST_CASE("kernel-sweep two-point smoke")
    {
        const auto r = run({"kernel-sweep", "--start", "0", "--stop", "10.5", "--points", "2", "--alpha", "0.5"});
        REQUIRE(r.code == 0);
        CHECK(r.out.rfind("# manifest", 0) == 0);
        const auto rows = payload(r.out);
        REQUIRE(rows.size() == 3);
        CHECK(rows[0] == "tau,alpha,kappa,gamma,D,status");
        const auto first = split(rows[1]), last = split(rows[2]);
        CHECK(std::stod(first[4]) == 1.0);
        CHECK(std::abs(std::stod(last[4]) - 0.592) <= 0.02);
        CHECK(last[5] == "ok");
    }

    TEST_CASE("kernel-sweep alpha monotone and reproducible")
    {
        const std::vector<std::string> args{"kernel-sweep", "--var", "alpha", "--start", "0", "--stop", "1",
                                            "--points", "11", "--tau", "7.5", "--threads", "3"};
        const auto a = run(args), b = run(args);
        REQUIRE(a.code == 0);
        CHECK(payload(a.out) == payload(b.out));
        const auto rows = payload(a.out);
        double prev = 2.0;
        for (std::size_t i = 1; i < rows.size(); ++i)
        {
            const double D = std::stod(split(rows[i])[4]);
            CHECK(D <= prev);
            prev = D;
        }
        // 17 significant digits
        CHECK(split(rows[5])[1] == "0.40000000000000002");
    }

    TEST_CASE("oracle-check")
    {
        const auto ok = run({"oracle-check", "--m-max", "3", "--kappas", "50", "--taus", "0.4,1.0"});
        CHECK(ok.code == 0);
        CHECK(payload(ok.out).size() == 7);
        const auto strict = run({"oracle-check", "--m-max", "2", "--kappas", "50", "--taus", "0.4", "--tol", "1e-15"});
        CHECK(strict.code != 0);
        // oversized kappa is reported per cell, not fatal
        const auto big = run({"oracle-check", "--m-max", "1", "--kappas", "50,1e7", "--taus", "0.4"});
        CHECK(big.out.find("capability") != std::string::npos);
    }

    TEST_CASE("feasibility from bundled configs")
    {
        const auto na = run({"--config", config("na_cluster.cfg"), "feasibility"});
        REQUIRE(na.code == 0);
        CHECK(na.out.find("verdict.dipole_threshold,pass") != std::string::npos);
        CHECK(na.out.find("fail") == std::string::npos);

        const auto c60 = run({"--config", config("c60.cfg"), "feasibility"});
        REQUIRE(c60.code == 0);
        CHECK(c60.out.find("verdict.dipole_threshold,fail") != std::string::npos);

        const auto flagged = run({"--config", config("na_cluster.cfg"), "feasibility", "--laser.power", "0.1"});
        REQUIRE(flagged.code == 0);
        CHECK(flagged.out.find("input.laser.power: 0.1") != std::string::npos);
    }

    TEST_CASE("feasibility errors")
    {
        const fs::path dir = scratch("cfg");
        fs::create_directories(dir);
        {
            std::ofstream(dir / "empty.cfg") << "# nothing\n";
        }
        const auto empty = run({"--config", (dir / "empty.cfg").string(), "feasibility"});
        CHECK(empty.code == 2);
        for (const char *key : {"molecule.polarizability", "molecule.size", "molecule.velocity", "molecule.mass",
                                "laser.power", "laser.sigma_y", "laser.sigma_z", "laser.period", "cavity.L"})
            CHECK(empty.err.find(key) != std::string::npos);

        const auto negative = run({"--config", config("na_cluster.cfg"), "feasibility", "--cavity.L", "-1"});
        CHECK(negative.code == 2);
        const auto missing = run({"--config", (dir / "absent.cfg").string(), "feasibility"});
        CHECK(missing.code == 4);
        fs::remove_all(dir);
    }

    TEST_CASE("usage and I/O errors")
    {
        CHECK(run({}).code == 2);
        CHECK(run({"no-such-command"}).code == 2);
        CHECK(run({"kernel-sweep", "--points", "1"}).code == 2);
        CHECK(run({"kernel-sweep", "--scale", "log", "--start", "0"}).code == 2);
        CHECK(run({"kernel-sweep", "--start", "3", "--stop", "1"}).code == 2);
        CHECK(run({"--threads", "0", "kernel-sweep"}).code == 2);
        CHECK(run({"--out", "/nonexistent-dir/x.csv", "kernel-sweep", "--points", "2"}).code == 4);
    }

    TEST_CASE("figure2 writes one CSV per alpha")
    {
        const fs::path dir = scratch("fig2");
        const auto r = run({"--out", dir.string(), "figure2", "--points", "51", "--alphas", "0.1,0.5"});
        REQUIRE(r.code == 0);
        const auto low = payload(slurp(dir / "figure2_alpha_0.1.csv"));
        const auto high = payload(slurp(dir / "figure2_alpha_0.5.csv"));
        REQUIRE(low.size() == 52);
        REQUIRE(high.size() == 52);
        CHECK(std::stod(split(low[1])[4]) == 1.0);
        CHECK(std::stod(split(high[1])[4]) == 1.0);
        for (std::size_t i = 1; i < low.size(); ++i)
            CHECK(std::stod(split(low[i])[4]) >= std::stod(split(high[i])[4]));
        fs::remove_all(dir);
    }

    TEST_CASE("modes-demo")
    {
        const auto r = run({"modes-demo", "--grids", "25,50,100"});
        REQUIRE(r.code == 0);
        const auto rows = payload(r.out);
        REQUIRE(rows.size() == 4);
        CHECK(rows[0] == "grid_size,overlap_grid,overlap_reference,rel_dev");
        double prev = INFINITY;
        for (std::size_t i = 1; i < rows.size(); ++i)
        {
            const double dev = std::stod(split(rows[i])[3]);
            CHECK(dev < prev);
            prev = dev;
        }
        const auto zero = run({"modes-demo", "--grids", "20,40", "--dipole", "0"});
        REQUIRE(zero.code == 0);
        const auto zero_rows = payload(zero.out);
        for (std::size_t i = 1; i < zero_rows.size(); ++i)
            CHECK(std::stod(split(zero_rows[i])[1]) == 1.0);

        CHECK(run({"modes-demo", "--kappa", "1e3"}).code == 2);
        CHECK(run({"modes-demo", "--grids", "100000"}).code == 2);
    }
}
