#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smp/coefficients.hpp"

namespace smp {

/// Malformed or inconsistent instance/inverse file content.
class ParseError : public Error { public: using Error::Error; };
/// File could not be opened, read or written.
class IoError : public Error { public: using Error::Error; };

/// On-disk instance: the free parameters p, r_odd and q_odd, or a full q.
///
/// r_odd[k] = r_{2k+1}, q_odd[k] = q_{2k+1}; r at even indices is zero.
struct InstanceFile {
    std::int64_t period = 0;
    std::vector<double> p;
    std::vector<double> r_odd;
    std::optional<std::vector<double>> q_odd;
    std::optional<std::vector<double>> q;
    std::optional<double> eta;
    std::optional<std::string> prng;
    std::optional<std::uint64_t> seed;
};

InstanceFile parse_instance(const std::string& text);
std::string dump_instance(const InstanceFile& inst);

InstanceFile load_instance(const std::string& path);
void save_instance(const InstanceFile& inst, const std::string& path);

/// Coefficients described by the file; q_even is completed when only q_odd is given.
SmpCoefficients<double> to_coefficients(const InstanceFile& inst);
InstanceFile from_coefficients(const SmpCoefficients<double>& c, bool free_parameters_only = true);

std::string dump_inverse(const InverseCoefficients<double>& inv);
InverseCoefficients<double> parse_inverse(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace smp
