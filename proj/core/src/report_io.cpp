#include "hverify/report_io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hverify {

namespace {

// FIPS 180-4 SHA-256, self-contained.
class Sha256 {
public:
    Sha256() { reset(); }

    void update(const unsigned char* data, std::size_t len) {
        for (std::size_t i = 0; i < len; ++i) {
            buf_[buf_len_++] = data[i];
            if (buf_len_ == 64) {
                process(buf_.data());
                total_ += 64;
                buf_len_ = 0;
            }
        }
    }

    std::array<unsigned char, 32> digest() {
        total_ += buf_len_;
        const std::uint64_t bits = total_ * 8;
        buf_[buf_len_++] = 0x80;
        if (buf_len_ > 56) {
            while (buf_len_ < 64) buf_[buf_len_++] = 0;
            process(buf_.data());
            buf_len_ = 0;
        }
        while (buf_len_ < 56) buf_[buf_len_++] = 0;
        for (int i = 7; i >= 0; --i) buf_[buf_len_++] = (bits >> (8 * i)) & 0xFF;
        process(buf_.data());
        std::array<unsigned char, 32> out{};
        for (int i = 0; i < 8; ++i) {
            out[4 * i] = (h_[i] >> 24) & 0xFF;
            out[4 * i + 1] = (h_[i] >> 16) & 0xFF;
            out[4 * i + 2] = (h_[i] >> 8) & 0xFF;
            out[4 * i + 3] = h_[i] & 0xFF;
        }
        return out;
    }

private:
    void reset() {
        h_ = {0x6a09e667u, 0xbb67ae85u, 0x3c6ef372u, 0xa54ff53au,
              0x510e527fu, 0x9b05688cu, 0x1f83d9abu, 0x5be0cd19u};
        buf_len_ = 0;
        total_ = 0;
    }

    static std::uint32_t rotr(std::uint32_t x, int n) {
        return (x >> n) | (x << (32 - n));
    }

    void process(const unsigned char* p) {
        static const std::uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b,
            0x59f111f1, 0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01,
            0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7,
            0xc19bf174, 0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc,
            0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da, 0x983e5152,
            0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc,
            0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
            0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819,
            0xd6990624, 0xf40e3585, 0x106aa070, 0x19a4c116, 0x1e376c08,
            0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f,
            0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) |
                   (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            const std::uint32_t s0 =
                rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            const std::uint32_t s1 =
                rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h_[0], b = h_[1], c = h_[2], d = h_[3], e = h_[4],
                      f = h_[5], g = h_[6], h = h_[7];
        for (int i = 0; i < 64; ++i) {
            const std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            const std::uint32_t ch = (e & f) ^ (~e & g);
            const std::uint32_t t1 = h + S1 + ch + K[i] + w[i];
            const std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            const std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            const std::uint32_t t2 = S0 + maj;
            h = g;
            g = f;
            f = e;
            e = d + t1;
            d = c;
            c = b;
            b = a;
            a = t1 + t2;
        }
        h_[0] += a;
        h_[1] += b;
        h_[2] += c;
        h_[3] += d;
        h_[4] += e;
        h_[5] += f;
        h_[6] += g;
        h_[7] += h;
    }

    std::array<std::uint32_t, 8> h_{};
    std::array<unsigned char, 64> buf_{};
    std::size_t buf_len_ = 0;
    std::uint64_t total_ = 0;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json sample_to_json(const VerifySample& s) {
    // numbers as fixed-format strings so the canonical body is byte-stable
    return nlohmann::json{{"input", s.input},
                          {"lhs", num(s.lhs)},
                          {"rhs", num(s.rhs)},
                          {"residual", num(s.residual)}};
}

nlohmann::json report_body_json(const VerifyReport& r) {
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["params"] = r.params;  // std::map: keys serialized in sorted order
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) samples.push_back(sample_to_json(s));
    j["samples"] = samples;
    j["max_residual"] = num(r.max_residual);
    j["tolerance"] = num(r.tolerance);
    j["passed"] = r.passed;
    return j;
}

std::string params_hash(const VerifyReport& r) {
    nlohmann::json j = r.params;
    return sha256_hex(j.dump()).substr(0, 12);
}

}  // namespace

std::string sha256_hex(const std::string& data) {
    Sha256 h;
    h.update(reinterpret_cast<const unsigned char*>(data.data()), data.size());
    const auto d = h.digest();
    static const char* hexd = "0123456789abcdef";
    std::string out(64, '0');
    for (int i = 0; i < 32; ++i) {
        out[2 * i] = hexd[d[i] >> 4];
        out[2 * i + 1] = hexd[d[i] & 0xF];
    }
    return out;
}

std::string canonical_body(const std::vector<VerifyReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_body_json(r));
    return arr.dump();
}

std::string reports_to_json(const std::vector<VerifyReport>& reports,
                            const std::string& suite) {
    nlohmann::json doc;
    doc["suite"] = suite;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j = report_body_json(r);
        j["runtime_ms"] = r.runtime_ms;
        arr.push_back(std::move(j));
    }
    doc["reports"] = arr;
    doc["body_sha256"] = sha256_hex(canonical_body(reports));
    return doc.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    os << "check,param-hash,point,lhs,rhs,residual,tol,passed\n";
    for (const auto& r : reports) {
        const std::string ph = params_hash(r);
        for (const auto& s : r.samples) {
            std::string inp = s.input;
            for (auto& ch : inp)
                if (ch == ',') ch = ';';
            os << r.check_name << ',' << ph << ',' << inp << ',' << num(s.lhs)
               << ',' << num(s.rhs) << ',' << num(s.residual) << ','
               << num(r.tolerance) << ',' << (r.passed ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

std::string reports_to_text(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    char line[256];
    for (const auto& r : reports) {
        os << "== " << r.check_name << " ==\n";
        for (const auto& kv : r.params)
            os << "   " << kv.first << " = " << kv.second << "\n";
        std::snprintf(line, sizeof(line), "   %-34s %13s %13s %13s\n", "sample",
                      "lhs", "rhs", "residual");
        os << line;
        for (const auto& s : r.samples) {
            std::snprintf(line, sizeof(line), "   %-34s %13.6e %13.6e %13.6e\n",
                          s.input.substr(0, 34).c_str(), s.lhs, s.rhs, s.residual);
            os << line;
        }
        std::snprintf(line, sizeof(line),
                      "   max_residual %.6e  tolerance %.6e  [%s]  (%lld ms)\n",
                      r.max_residual, r.tolerance, r.passed ? "PASS" : "FAIL",
                      static_cast<long long>(r.runtime_ms));
        os << line;
    }
    return os.str();
}

KernelParams RunConfig::kernel() const {
    const double Q = 2.0 * static_cast<double>(n) + 2.0;
    const double sigma = (Q + alpha) / (Q - alpha);
    return make_kernel_params(n, alpha, p_set ? p : sigma);
}

RunConfig parse_config_file(const std::string& path, RunConfig base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config file not readable: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("config parse error: " + std::string(e.what()));
    }
    if (!j.is_object()) throw std::runtime_error("config must be a JSON object");
    RunConfig cfg = base;
    for (const auto& [key, val] : j.items()) {
        if (key == "suite")
            cfg.suite = val.get<std::string>();
        else if (key == "kernel.n")
            cfg.n = val.get<std::size_t>();
        else if (key == "kernel.alpha")
            cfg.alpha = val.get<double>();
        else if (key == "kernel.p") {
            cfg.p = val.get<double>();
            cfg.p_set = true;
        } else if (key == "reflection.lambda")
            cfg.lambda_plane = val.get<double>();
        else if (key == "quad.delta")
            cfg.quad.delta = val.get<double>();
        else if (key == "quad.radius" || key == "quad.R_trunc")
            cfg.quad.R_trunc = val.get<double>();
        else if (key == "quad.nodes_rho")
            cfg.quad.nodes_rho = val.get<int>();
        else if (key == "quad.nodes_angle")
            cfg.quad.nodes_angle = val.get<int>();
        else if (key == "quad.nodes_outer")
            cfg.quad.nodes_outer = val.get<int>();
        else if (key == "quad.mc_samples")
            cfg.quad.mc_samples = val.get<std::uint64_t>();
        else if (key == "quad.seed")
            cfg.quad.seed = val.get<std::uint64_t>();
        else if (key == "quad.tol")
            cfg.quad.tol = val.get<double>();
        else if (key == "output")
            cfg.output_path = val.get<std::string>();
        else if (key == "format")
            cfg.format = val.get<std::string>();
        else
            throw std::runtime_error("unknown config key: " + key);
    }
    return cfg;
}

}  // namespace hverify
