#include "ulam/body_io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "ulam/errors.hpp"

#include "json.hpp"

namespace ulam {

namespace {

// Minimal SHA-1, enough for content hashing of body files.
struct Sha1 {
    uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u,
                     0xC3D2E1F0u};
    std::string buf;

    static uint32_t rol(uint32_t v, int n) { return (v << n) | (v >> (32 - n)); }

    void block(const unsigned char* p) {
        uint32_t w[80];
        for (int i = 0; i < 16; ++i)
            w[i] = (uint32_t(p[4 * i]) << 24) | (uint32_t(p[4 * i + 1]) << 16) |
                   (uint32_t(p[4 * i + 2]) << 8) | uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 80; ++i)
            w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
        uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            uint32_t f, k;
            if (i < 20) {
                f = (b & c) | ((~b) & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const uint32_t tmp = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = tmp;
        }
        h[0] += a;
        h[1] += b;
        h[2] += c;
        h[3] += d;
        h[4] += e;
    }

    std::string digest(const std::string& data) {
        const uint64_t bits = uint64_t(data.size()) * 8;
        std::string m = data;
        m.push_back(char(0x80));
        while (m.size() % 64 != 56) m.push_back(0);
        for (int i = 7; i >= 0; --i) m.push_back(char((bits >> (8 * i)) & 0xFF));
        for (size_t i = 0; i < m.size(); i += 64)
            block(reinterpret_cast<const unsigned char*>(m.data() + i));
        char out[41];
        std::snprintf(out, sizeof(out), "%08x%08x%08x%08x%08x", h[0], h[1],
                      h[2], h[3], h[4]);
        return std::string(out, 40);
    }
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

using json = nlohmann::ordered_json;

// Floats are emitted as text through fmt17 so the output is reproducible.
void emit_rows(std::ostream& os, const std::vector<std::vector<double>>& rows) {
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < rows[i].size(); ++j) {
            if (j) os << ",";
            os << fmt17(rows[i][j]);
        }
        os << "]";
    }
    os << "]";
}

}  // namespace

std::string git_blob_sha1(const std::string& payload) {
    std::string pre = "blob " + std::to_string(payload.size());
    pre.push_back('\0');
    return Sha1().digest(pre + payload);
}

ProfileBody BodyFile::body() const {
    return ProfileBody::from_polar(dim, polar_chart, tau, amplitude);
}

namespace {

std::string serialize_with_hash(const BodyFile& f, const std::string& hash) {
    std::ostringstream os;
    os << "{\"dim\":" << f.dim << ",\"tau\":" << fmt17(f.tau)
       << ",\"amplitude\":" << fmt17(f.amplitude);

    const ProfileBody body = f.body();
    os << ",\"profile\":";
    {
        std::vector<std::vector<double>> rows;
        for (const auto& [t, v] : body.profile_samples()) rows.push_back({t, v});
        emit_rows(os, rows);
    }
    os << ",\"slope_chart\":";
    {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < f.slope_chart.s.size(); ++i)
            rows.push_back({f.slope_chart.s[i], f.slope_chart.x[i],
                            f.slope_chart.y[i], f.slope_chart.xp[i],
                            f.slope_chart.yp[i]});
        emit_rows(os, rows);
    }
    os << ",\"polar_chart\":";
    {
        std::vector<std::vector<double>> rows;
        for (size_t i = 0; i < f.polar_chart.alpha.size(); ++i)
            rows.push_back({f.polar_chart.alpha[i], f.polar_chart.R[i],
                            f.polar_chart.r[i]});
        emit_rows(os, rows);
    }
    os << ",\"provenance\":{\"generator\":" << json(f.provenance.generator)
       << ",\"parameters\":" << json(f.provenance.parameters)
       << ",\"hash\":\"" << hash << "\"}}";
    return os.str();
}

}  // namespace

std::string serialize_body(const BodyFile& file) {
    const std::string unhashed = serialize_with_hash(file, "");
    return serialize_with_hash(file, git_blob_sha1(unhashed));
}

void save_body(const BodyFile& file, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot open for writing: " + path);
    out << serialize_body(file) << "\n";
}

BodyFile load_body(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open body file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParameterError(std::string("body file parse error: ") + e.what());
    }
    BodyFile f;
    try {
        f.dim = j.at("dim").get<int>();
        f.tau = j.at("tau").get<double>();
        f.amplitude = j.at("amplitude").get<double>();
        for (const auto& row : j.at("slope_chart")) {
            f.slope_chart.s.push_back(row.at(0).get<double>());
            f.slope_chart.x.push_back(row.at(1).get<double>());
            f.slope_chart.y.push_back(row.at(2).get<double>());
            f.slope_chart.xp.push_back(row.at(3).get<double>());
            f.slope_chart.yp.push_back(row.at(4).get<double>());
        }
        for (const auto& row : j.at("polar_chart")) {
            f.polar_chart.alpha.push_back(row.at(0).get<double>());
            f.polar_chart.R.push_back(row.at(1).get<double>());
            f.polar_chart.r.push_back(row.at(2).get<double>());
        }
        if (j.contains("provenance")) {
            f.provenance.generator =
                j["provenance"].value("generator", std::string());
            f.provenance.parameters =
                j["provenance"].value("parameters", std::string());
        }
    } catch (const std::exception& e) {
        throw ParameterError(std::string("body file schema error: ") + e.what());
    }
    if (f.dim < 3) throw ParameterError("body file: dim must be >= 3");
    if (f.amplitude > 0.0 && f.tau > 0.0 && f.tau < 0.25)
        f.slope_chart.bump = Bump(f.tau, f.amplitude, 8);
    return f;
}

}  // namespace ulam
