#include "vdl/config.hpp"

#include "vdl/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>

namespace vdl::cli
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto first = s.find_first_not_of(" \t\r");
            if (first == std::string::npos)
                return {};
            const auto last = s.find_last_not_of(" \t\r");
            return s.substr(first, last - first + 1);
        }
    }

    Config Config::parse(std::istream &in, const std::string &source)
    {
        Config c;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            // '#' starts a comment anywhere on the line
            const std::string t = trim(line.substr(0, line.find('#')));
            if (t.empty())
                continue;
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                throw UsageError(source + ":" + std::to_string(lineno) + ": expected 'key = value'");
            const std::string key = trim(t.substr(0, eq));
            if (key.empty())
                throw UsageError(source + ":" + std::to_string(lineno) + ": empty key");
            c.set(key, trim(t.substr(eq + 1)));
        }
        return c;
    }

    Config Config::load(const std::string &path)
    {
        std::ifstream f(path);
        if (!f)
            throw IoError("cannot open config '" + path + "'");
        return parse(f, path);
    }

    void Config::set(const std::string &key, const std::string &value) { values_[key] = value; }

    double Config::number(const std::string &key) const
    {
        const std::string &s = get(key);
        double v = 0.0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (res.ec != std::errc() || res.ptr != s.data() + s.size())
            throw UsageError("key '" + key + "': '" + s + "' is not a number");
        return v;
    }

    const std::vector<std::string> &required_feasibility_keys()
    {
        static const std::vector<std::string> keys = {
            "molecule.polarizability", "molecule.size", "molecule.velocity", "molecule.mass", "laser.power",
            "laser.sigma_y",           "laser.sigma_z", "laser.period",      "cavity.L",
        };
        return keys;
    }

    const std::vector<std::string> &optional_feasibility_keys()
    {
        static const std::vector<std::string> keys = {"molecule.name", "cavity.k_max", "run.transit_convention"};
        return keys;
    }

    FeasibilityInputs feasibility_inputs(const Config &config)
    {
        const auto &required = required_feasibility_keys();
        const auto &optional = optional_feasibility_keys();

        std::vector<std::string> unknown;
        for (const auto &[k, v] : config.values())
            if (std::find(required.begin(), required.end(), k) == required.end() &&
                std::find(optional.begin(), optional.end(), k) == optional.end())
                unknown.push_back(k);
        if (!unknown.empty())
        {
            std::string msg = "unknown configuration key(s):";
            for (const auto &k : unknown)
                msg += " " + k;
            throw UsageError(msg);
        }

        std::vector<std::string> missing;
        for (const auto &k : required)
            if (!config.has(k))
                missing.push_back(k);
        if (!missing.empty())
        {
            std::string msg = "missing required key(s):";
            for (const auto &k : missing)
                msg += " " + k;
            throw UsageError(msg);
        }

        auto positive = [&](const std::string &key) {
            const double v = config.number(key);
            if (!(v > 0.0) || !std::isfinite(v))
                throw ValidationError("key '" + key + "' must be > 0, got " + config.get(key));
            return v;
        };

        FeasibilityInputs in;
        in.molecule.name = config.has("molecule.name") ? config.get("molecule.name") : "molecule";
        in.molecule.polarizability = positive("molecule.polarizability");
        in.molecule.size = positive("molecule.size");
        in.molecule.velocity = positive("molecule.velocity");
        in.molecule.mass = positive("molecule.mass");
        in.laser.power = positive("laser.power");
        in.laser.sigma_y = positive("laser.sigma_y");
        in.laser.sigma_z = positive("laser.sigma_z");
        in.laser.grating_period = positive("laser.period");
        in.cavity.plate_separation = positive("cavity.L");
        if (config.has("cavity.k_max"))
            in.cavity.cutoff_wavenumber = positive("cavity.k_max");
        if (config.has("run.transit_convention"))
        {
            const std::string &t = config.get("run.transit_convention");
            if (t == "half_width")
                in.transit = feasibility::TransitConvention::half_width;
            else if (t == "full_width")
                in.transit = feasibility::TransitConvention::full_width;
            else
                throw UsageError("run.transit_convention must be 'half_width' or 'full_width', got '" + t + "'");
        }
        return in;
    }
}
