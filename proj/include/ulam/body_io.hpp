#pragma once

#include <string>

#include "ulam/profile.hpp"

namespace ulam {

/// Everything a body file carries besides the geometry itself.
struct Provenance {
    std::string generator;
    std::string parameters;  // serialized parameter echo, deterministic
};

struct BodyFile {
    int dim = 3;
    double tau = 0.0;
    double amplitude = 0.0;
    SlopeChart slope_chart;
    PolarChart polar_chart;
    Provenance provenance;

    ProfileBody body() const;
};

/// Serializes the body file; floating-point values are written with 17
/// significant digits so identical inputs produce byte-identical output.
/// provenance.hash is the SHA-1 of "blob <len>\0<payload>" over the
/// serialization with the hash field blanked.
std::string serialize_body(const BodyFile& file);
void save_body(const BodyFile& file, const std::string& path);
BodyFile load_body(const std::string& path);

/// SHA-1 digest (lowercase hex) of a byte string, git blob style.
std::string git_blob_sha1(const std::string& payload);

}  // namespace ulam
