#include "condec/report.hpp"

#include <cstdint>
#include <cstdio>

namespace condec::report {

using nlohmann::json;

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

json word(const Word &w) {
    return to_string(w);
}

json alphabet(const Alphabet &a) {
    json out = json::array();
    for (const Event &e : a)
        out.push_back(e.str());
    return out;
}

json to_json(const CdVerdict &v) {
    json out{{"decomposable", v.decomposable}};
    out["witness"] = v.witness ? word(*v.witness) : json(nullptr);
    out["failing_index"] = v.failing_index ? json(*v.failing_index) : json(nullptr);
    return out;
}

json to_json(const ExtensionTrace &t) {
    json added = json::array();
    for (const Event &e : t.added)
        added.push_back(e.str());
    return {{"added", added},
            {"restarts", t.restarts},
            {"final_ek", alphabet(t.final_ek)},
            {"verified", t.verified}};
}

json to_json(const NonblockingReport &r) {
    json cond1 = json::array();
    for (std::size_t i = 0; i < r.condition1.size(); ++i) {
        json entry{{"nonblocking", static_cast<bool>(r.condition1[i])}};
        entry["witness"] = r.condition1_witness[i] ? word(*r.condition1_witness[i]) : json(nullptr);
        cond1.push_back(entry);
    }
    json out{{"condition1", cond1}, {"condition2", to_json(r.condition2)}, {"overall", r.overall}};
    out["direct"] = r.direct ? json(*r.direct) : json(nullptr);
    out["direct_witness"] = r.direct_witness ? word(*r.direct_witness) : json(nullptr);
    return out;
}

json to_json(const ObserverResult &r) {
    json all = json::array();
    for (const ObserverCounterexample &c : r.all)
        all.push_back({{"s", word(c.s)}, {"t", word(c.t)}});
    json out{{"observer", r.is_observer}, {"counterexamples", all}};
    out["counterexample"] = r.counterexample
                                ? json{{"s", word(r.counterexample->s)},
                                       {"t", word(r.counterexample->t)}}
                                : json(nullptr);
    return out;
}

json envelope(const std::string &command, const std::vector<InputFile> &inputs, bool holds,
              json result, double timing_ms) {
    json files = json::array();
    for (const InputFile &f : inputs)
        files.push_back({{"path", f.path}, {"digest", f.digest}});
    return {{"schema", kSchema},  {"command", command},      {"inputs", files},
            {"holds", holds},     {"result", std::move(result)}, {"timing_ms", timing_ms}};
}

} // namespace condec::report
