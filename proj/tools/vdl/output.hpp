#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace vdl::cli
{
    /// Shortest locale-independent form with 17 significant digits.
    std::string format_number(double v);

    /// Shortest round-trip form, for labels such as file names.
    std::string format_label(double v);

    /// Comment block written at the top of every output file; each line is
    /// prefixed with "# ".
    struct RunManifest
    {
        std::string command;
        std::vector<std::pair<std::string, std::string>> inputs;

        void add(const std::string &key, double value) { inputs.emplace_back(key, format_number(value)); }
        void add(const std::string &key, std::string value) { inputs.emplace_back(key, std::move(value)); }

        std::string render() const;
    };

    std::string utc_timestamp();

    /// Write text to path, or to `fallback` when path is empty. Throws IoError.
    void write_output(const std::string &path, const std::string &text, std::ostream &fallback);
}
