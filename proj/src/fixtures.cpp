#include "encheck/fixtures.hpp"

namespace encheck {

namespace {

rel rel_from_names(const transition_system& sys, carrier_kind over,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
    rel r(over, sys.size());
    for (const auto& [a, b] : pairs) r.add(sys.index_of(a), sys.index_of(b));
    return r;
}

instance_document fig1() {
    auto source = make_system({"s1", "s2"}, {{"s1", "s1"}, {"s1", "s2"}}, {}, {});
    auto target = make_system({"t1", "t2", "t3"}, {{"t1", "t3"}, {"t3", "t3"}}, {}, {});
    instance_document doc;
    doc.enc = make_instance(std::move(source), std::move(target), {{"s1", "t1"}, {"s2", "t2"}});
    rel rt = rel_from_names(doc.enc.target, carrier_kind::target, {{"t2", "t3"}});
    doc.relations.emplace("RT", rt.closed_refl().closed_trans());
    return doc;
}

instance_document fig2() {
    auto source = make_system({"s1", "s2", "s3"}, {}, {}, {});
    auto target = make_system({"t1", "t2", "t3"}, {{"t2", "t3"}}, {}, {});
    instance_document doc;
    doc.enc = make_instance(std::move(source), std::move(target),
                            {{"s1", "t1"}, {"s2", "t2"}, {"s3", "t3"}});
    rel rs = rel_from_names(doc.enc.source, carrier_kind::source, {{"s1", "s2"}});
    rel rt = rel_from_names(doc.enc.target, carrier_kind::target, {{"t1", "t2"}});
    doc.relations.emplace("RS", rs.closed_refl().closed_sym().closed_trans());
    doc.relations.emplace("RT", rt.closed_refl().closed_sym().closed_trans());
    return doc;
}

instance_document fig3() {
    auto source = make_system({"s1", "s2", "s_a", "s_c"},
                              {{"s1", "s2"}, {"s2", "s_a"}, {"s2", "s_c"}},
                              {{"s_a", {"a"}}, {"s_c", {"c"}}, {"s2", {"b"}}}, {});
    auto target = make_system({"t1", "t2", "t3", "t4", "t5", "t_a", "t_c"},
                              {{"t1", "t3"},
                               {"t2", "t4"},
                               {"t2", "t_c"},
                               {"t3", "t5"},
                               {"t3", "t_a"},
                               {"t4", "t_a"},
                               {"t5", "t_c"}},
                              {{"t_a", {"a"}}, {"t_c", {"c"}}, {"t4", {"b"}}, {"t5", {"b"}}}, {});
    instance_document doc;
    doc.enc = make_instance(std::move(source), std::move(target),
                            {{"s1", "t1"}, {"s2", "t2"}, {"s_a", "t_a"}, {"s_c", "t_c"}});
    rel rcorr(carrier_kind::combined, doc.enc.combined.size());
    const auto& comb = doc.enc.combined;
    for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"s1", "t1"}, {"s2", "t2"}, {"s2", "t3"}, {"s_a", "t_a"}, {"s_c", "t_c"}})
        rcorr.add(comb.index_of(a), comb.index_of(b));
    doc.relations.emplace("Rcorr", std::move(rcorr));
    return doc;
}

} // namespace

instance_document fixture(std::string_view name) {
    if (name == "fig1") return fig1();
    if (name == "fig2") return fig2();
    if (name == "fig3") return fig3();
    throw error(errc::unknown_fixture, "unknown fixture '" + std::string(name) + "'");
}

} // namespace encheck
