#include "smp/instance.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "smp/inverse.hpp"

namespace smp {

using nlohmann::json;

namespace {

std::vector<double> number_array(const json& j, const char* field, std::size_t expected)
{
    if (!j.contains(field))
        throw ParseError(std::string("missing field '") + field + "'");
    const auto& a = j.at(field);
    if (!a.is_array())
        throw ParseError(std::string("field '") + field + "' must be an array of numbers");
    if (a.size() != expected)
        throw ParseError(std::string("field '") + field + "': expected " + std::to_string(expected)
                         + " numbers, got " + std::to_string(a.size()));
    std::vector<double> out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number())
            throw ParseError(std::string("field '") + field + "[" + std::to_string(i) + "]' is not a number");
        out.push_back(a[i].get<double>());
    }
    return out;
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::int64_t parse_period(const json& j)
{
    if (!j.contains("period") || !j.at("period").is_number_integer())
        throw ParseError("field 'period' must be an integer");
    const auto period = j.at("period").get<std::int64_t>();
    if (period < 2 || period % 2 != 0)
        throw ParseError("field 'period' must be even and >= 2, got " + std::to_string(period));
    return period;
}

Vec<double> to_vec(const std::vector<double>& v)
{
    return Eigen::Map<const Vec<double>>(v.data(), Eigen::Index(v.size()));
}

std::vector<double> to_std(const PeriodicSeq<double>& s)
{
    return {s.values().data(), s.values().data() + s.period()};
}

} // namespace

InstanceFile parse_instance(const std::string& text)
{
    const json j = parse_json(text);
    if (!j.is_object())
        throw ParseError("instance must be a JSON object");
    InstanceFile inst;
    inst.period = parse_period(j);
    const auto m = std::size_t(inst.period / 2);
    inst.p = number_array(j, "p", std::size_t(inst.period));
    inst.r_odd = number_array(j, "r_odd", m);
    const bool has_q_odd = j.contains("q_odd");
    const bool has_q = j.contains("q");
    if (has_q_odd == has_q)
        throw ParseError("exactly one of 'q_odd' or 'q' must be present");
    if (has_q_odd)
        inst.q_odd = number_array(j, "q_odd", m);
    else
        inst.q = number_array(j, "q", std::size_t(inst.period));
    if (j.contains("eta")) {
        if (!j.at("eta").is_number())
            throw ParseError("field 'eta' must be a number");
        inst.eta = j.at("eta").get<double>();
    }
    if (j.contains("prng") && j.at("prng").is_string())
        inst.prng = j.at("prng").get<std::string>();
    if (j.contains("seed") && j.at("seed").is_number_unsigned())
        inst.seed = j.at("seed").get<std::uint64_t>();
    return inst;
}

std::string dump_instance(const InstanceFile& inst)
{
    json j;
    j["period"] = inst.period;
    j["p"] = inst.p;
    j["r_odd"] = inst.r_odd;
    if (inst.q_odd)
        j["q_odd"] = *inst.q_odd;
    if (inst.q)
        j["q"] = *inst.q;
    if (inst.eta)
        j["eta"] = *inst.eta;
    if (inst.prng)
        j["prng"] = *inst.prng;
    if (inst.seed)
        j["seed"] = *inst.seed;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

InstanceFile load_instance(const std::string& path) { return parse_instance(read_file(path)); }

void save_instance(const InstanceFile& inst, const std::string& path) { write_file(path, dump_instance(inst)); }

SmpCoefficients<double> to_coefficients(const InstanceFile& inst)
{
    const auto period = Eigen::Index(inst.period);
    Vec<double> r = Vec<double>::Zero(period);
    for (Eigen::Index k = 0; k < period / 2; ++k)
        r[2 * k + 1] = inst.r_odd[std::size_t(k)];
    PeriodicSeq<double> p(to_vec(inst.p));
    PeriodicSeq<double> rs(r);

    PeriodicSeq<double> q = PeriodicSeq<double>::zero(period);
    if (inst.q) {
        q = PeriodicSeq<double>(to_vec(*inst.q));
    } else {
        Vec<double> qo = Vec<double>::Zero(period);
        for (Eigen::Index k = 0; k < period / 2; ++k)
            qo[2 * k + 1] = (*inst.q_odd)[std::size_t(k)];
        try {
            q = complete_even_q(p, rs, PeriodicSeq<double>(qo));
        } catch (const DivisionByZero&) {
            // structure check reports the zero odd r; q_even stays at zero
            q = PeriodicSeq<double>(qo);
        }
    }
    if (inst.eta)
        return {p, q, rs, *inst.eta};
    return SmpCoefficients<double>::with_best_eta(p, q, rs);
}

InstanceFile from_coefficients(const SmpCoefficients<double>& c, bool free_parameters_only)
{
    InstanceFile inst;
    inst.period = c.period();
    inst.p = to_std(c.p);
    std::vector<double> q_odd;
    for (Eigen::Index n = 1; n < c.period(); n += 2) {
        inst.r_odd.push_back(c.r.values()[n]);
        q_odd.push_back(c.q.values()[n]);
    }
    if (free_parameters_only)
        inst.q_odd = q_odd;
    else
        inst.q = to_std(c.q);
    inst.eta = c.eta;
    return inst;
}

std::string dump_inverse(const InverseCoefficients<double>& inv)
{
    json j;
    j["period"] = inv.period();
    j["rho"] = to_std(inv.rho);
    j["pi"] = to_std(inv.pi);
    j["sigma"] = to_std(inv.sigma);
    return j.dump(2) + "\n";
}

InverseCoefficients<double> parse_inverse(const std::string& text)
{
    const json j = parse_json(text);
    if (!j.is_object())
        throw ParseError("inverse must be a JSON object");
    const auto period = std::size_t(parse_period(j));
    return {PeriodicSeq<double>(to_vec(number_array(j, "rho", period))),
            PeriodicSeq<double>(to_vec(number_array(j, "pi", period))),
            PeriodicSeq<double>(to_vec(number_array(j, "sigma", period)))};
}

} // namespace smp
