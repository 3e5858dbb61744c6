#include "betscan/isotherm.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <memory>

namespace betscan {
namespace {

std::string describe(IsothermError::Kind kind, std::optional<std::size_t> index) {
    std::string msg = to_string(kind);
    if (index) msg += " at point " + std::to_string(*index);
    return msg;
}

}  // namespace

IsothermError::IsothermError(Kind kind, std::optional<std::size_t> index)
    : std::runtime_error(describe(kind, index)), kind_(kind), index_(index) {}

IsothermError::IsothermError(Kind kind, std::optional<std::size_t> index, const std::string& what)
    : std::runtime_error(what), kind_(kind), index_(index) {}

const char* to_string(IsothermError::Kind kind) noexcept {
    switch (kind) {
        case IsothermError::Kind::NonMonotonePressure: return "NonMonotonePressure";
        case IsothermError::Kind::PressureOutOfRange: return "PressureOutOfRange";
        case IsothermError::Kind::NonPositiveUptake: return "NonPositiveUptake";
        case IsothermError::Kind::NonFinite: return "NonFinite";
        case IsothermError::Kind::TooShort: return "TooShort";
    }
    return "Unknown";
}

Isotherm validate_isotherm(std::vector<Point> points) {
    using Kind = IsothermError::Kind;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const Point& pt = points[k];
        if (!std::isfinite(pt.p) || !std::isfinite(pt.n)) throw IsothermError(Kind::NonFinite, k);
        if (!(pt.p > 0.0 && pt.p < 1.0)) throw IsothermError(Kind::PressureOutOfRange, k);
        if (!(pt.n > 0.0)) throw IsothermError(Kind::NonPositiveUptake, k);
        if (k > 0 && !(points[k - 1].p < pt.p)) throw IsothermError(Kind::NonMonotonePressure, k);
    }
    if (points.size() < 2) throw IsothermError(Kind::TooShort, std::nullopt);
    return Isotherm(std::move(points));
}

std::string isotherm_digest(const Isotherm& iso) {
    std::string canonical;
    canonical.reserve(iso.size() * 48);
    char buf[64];
    for (const auto& pt : iso.points()) {
        const int len = std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pt.p, pt.n);
        canonical.append(buf, static_cast<std::size_t>(len));
    }

    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int md_len = 0;
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), canonical.data(), canonical.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md.data(), &md_len) != 1) {
        throw std::runtime_error("isotherm_digest: SHA-256 failed");
    }

    static constexpr char kHex[] = "0123456789abcdef";
    std::string hex;
    hex.reserve(2 * md_len);
    for (unsigned int k = 0; k < md_len; ++k) {
        hex.push_back(kHex[md[k] >> 4]);
        hex.push_back(kHex[md[k] & 0xF]);
    }
    return hex;
}

}  // namespace betscan
