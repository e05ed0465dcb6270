#pragma once

#include "vdl/feasibility.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdl::cli
{
    /// Flat `key = value` configuration. Blank lines and lines starting with
    /// '#' are ignored; later assignments override earlier ones.
    class Config
    {
    public:
        static Config parse(std::istream &in, const std::string &source = "<input>");
        static Config load(const std::string &path);

        void set(const std::string &key, const std::string &value);
        bool has(const std::string &key) const { return values_.count(key) != 0; }
        const std::string &get(const std::string &key) const { return values_.at(key); }
        double number(const std::string &key) const;
        const std::map<std::string, std::string> &values() const { return values_; }

    private:
        std::map<std::string, std::string> values_;
    };

    // Units: polarizability C m^2/V, size m, velocity m/s, mass kg,
    // power W, sigma_y/sigma_z/period m, L m, k_max 1/m.
    const std::vector<std::string> &required_feasibility_keys();
    const std::vector<std::string> &optional_feasibility_keys();

    struct FeasibilityInputs
    {
        feasibility::MoleculeSpec molecule;
        feasibility::LaserConfig laser;
        feasibility::CavityConfig cavity;
        feasibility::TransitConvention transit = feasibility::TransitConvention::half_width;
    };

    /// Throws UsageError naming every missing or unknown key, and
    /// ValidationError for non-positive values.
    FeasibilityInputs feasibility_inputs(const Config &config);

    class ValidationError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}
