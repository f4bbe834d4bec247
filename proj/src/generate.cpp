#include "encheck/generate.hpp"

#include <random>

namespace encheck {

namespace {

// mt19937_64 gives a portable stream; distributions are drawn by hand since
// the standard ones are implementation-defined.
class dice {
public:
    explicit dice(std::uint64_t a, std::uint64_t b) : rng_(mix(a, b)) {}

    std::uint64_t next() { return rng_(); }
    int range(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool chance(double p) {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t x = a ^ (0x9e3779b97f4a7c15ULL + (b << 6) + (b >> 2));
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 31;
        return x ^ b;
    }

    std::mt19937_64 rng_;
};

std::vector<std::string> state_names(const char* prefix, int count) {
    std::vector<std::string> out;
    for (int i = 0; i < count; ++i) {
        std::string suffix = std::to_string(i);
        if (count > 9 && suffix.size() < 2) suffix = "0" + suffix;
        out.push_back(prefix + suffix);
    }
    return out;
}

transition_system random_system(dice& d, const gen_config& cfg, const char* prefix, int max_states) {
    const int n = 1 + d.range(max_states);
    auto names = state_names(prefix, n);
    std::vector<std::pair<std::string, std::string>> steps;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d.chance(cfg.step_density)) steps.emplace_back(names[static_cast<std::size_t>(a)],
                                                               names[static_cast<std::size_t>(b)]);
    std::map<std::string, std::vector<std::string>> barbs;
    for (int a = 0; a < n; ++a)
        for (const auto& barb : cfg.barb_alphabet)
            if (d.chance(cfg.barb_probability)) barbs[names[static_cast<std::size_t>(a)]].push_back(barb);
    std::vector<std::string> success;
    for (int a = 0; a < n; ++a)
        if (d.chance(cfg.success_probability)) success.push_back(names[static_cast<std::size_t>(a)]);
    return make_system(std::move(names), std::move(steps), std::move(barbs), std::move(success));
}

rel random_rel(dice& d, const gen_config& cfg, carrier_kind over, int n) {
    rel r(over, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (d.chance(cfg.relation_density)) r.add(a, b);
    if (cfg.relation_closure == "preorder") r = r.closed_refl().closed_trans();
    if (cfg.relation_closure == "equivalence") r = r.closed_refl().closed_sym().closed_trans();
    return r;
}

} // namespace

instance_document generate(const gen_config& config, std::uint64_t index) {
    dice d(config.seed, index);
    auto source = random_system(d, config, "s", config.max_source_states);
    auto target = random_system(d, config, "t", config.max_target_states);

    std::map<std::string, std::string> mapping;
    for (const auto& name : source.names)
        mapping[name] = target.name_of(d.range(target.size()));

    instance_document doc;
    doc.enc = make_instance(std::move(source), std::move(target), mapping);
    doc.relations.emplace("RS", random_rel(d, config, carrier_kind::source, doc.enc.source.size()));
    doc.relations.emplace("RT", random_rel(d, config, carrier_kind::target, doc.enc.target.size()));
    doc.relations.emplace("R", random_rel(d, config, carrier_kind::combined, doc.enc.combined.size()));
    return doc;
}

} // namespace encheck
