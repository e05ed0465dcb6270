#include "vdl/output.hpp"

#include "vdl/cli.hpp"
#include "vdl/constants.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

namespace vdl::cli
{
    std::string format_number(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
        return std::string(buf, res.ptr);
    }

    std::string format_label(double v)
    {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, res.ptr);
    }

    std::string utc_timestamp()
    {
        const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm tm{};
        gmtime_r(&now, &tm);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
        return buf;
    }

    std::string RunManifest::render() const
    {
        std::ostringstream os;
        os << "# manifest\n";
        os << "# version: vdl " << VDL_VERSION << "\n";
        os << "# command: " << command << "\n";
        os << "# timestamp: " << utc_timestamp() << "\n";
        os << "# constant.c: " << format_number(constants::speed_of_light) << "\n";
        os << "# constant.hbar: " << format_number(constants::hbar) << "\n";
        os << "# constant.eps0: " << format_number(constants::vacuum_permittivity) << "\n";
        os << "# constant.euler_gamma: " << format_number(constants::euler_gamma) << "\n";
        for (const auto &[k, v] : inputs)
            os << "# input." << k << ": " << v << "\n";
        return os.str();
    }

    void write_output(const std::string &path, const std::string &text, std::ostream &fallback)
    {
        if (path.empty())
        {
            fallback << text;
            fallback.flush();
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw IoError("cannot open '" + path + "' for writing");
        f << text;
        f.close();
        if (!f)
            throw IoError("failed writing '" + path + "'");
    }
}
