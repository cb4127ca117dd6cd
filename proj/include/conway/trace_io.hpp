#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "conway/board.hpp"

namespace conway {

struct TraceFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// JSON-lines move trace: a header object, one object per move, and an
/// optional claim trailer. Output is byte-deterministic (sorted keys,
/// newline-terminated lines).
inline void write_trace(std::ostream& os, const MoveTrace& t) {
    nlohmann::json header{{"version", 1},
                          {"m", t.params.m},
                          {"k", t.params.k},
                          {"d", t.params.d},
                          {"background", "halfspace"}};
    os << header.dump() << "\n";
    for (const Move& mv : t.moves) {
        nlohmann::json line{{"from", mv.from}, {"axis", mv.axis}, {"sign", mv.sign}};
        os << line.dump() << "\n";
    }
    if (t.claim) {
        nlohmann::json claim;
        if (t.claim->row) claim["row"] = *t.claim->row;
        if (t.claim->count_at) {
            claim["count"] = t.claim->count_at->second.get_str();
            claim["at"] = t.claim->count_at->first;
        }
        os << nlohmann::json{{"claim", claim}}.dump() << "\n";
    }
}

inline MoveTrace read_trace(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw TraceFormatError("trace: missing header line");
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw TraceFormatError(std::string("trace: bad header: ") + e.what());
    }
    if (header.value("version", 0) != 1) throw TraceFormatError("trace: unsupported version");
    if (header.value("background", "") != "halfspace")
        throw TraceFormatError("trace: unsupported background");

    MoveTrace t;
    try {
        t.params = GameParams{header.at("m").get<int>(), header.at("k").get<int>(),
                              header.at("d").get<int>()};
        t.params.validate();
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            nlohmann::json obj = nlohmann::json::parse(line);
            if (obj.contains("claim")) {
                const auto& c = obj.at("claim");
                TraceClaim claim;
                if (c.contains("row")) claim.row = c.at("row").get<long>();
                if (c.contains("count"))
                    claim.count_at = std::make_pair(
                        c.at("at").get<Position>(),
                        c.at("count").is_string() ? Int(c.at("count").get<std::string>())
                                                  : Int(c.at("count").get<long>()));
                t.claim = std::move(claim);
                break;
            }
            Move mv{obj.at("from").get<Position>(), obj.at("axis").get<int>(),
                    obj.at("sign").get<int>()};
            if (static_cast<int>(mv.from.size()) != t.params.d)
                throw TraceFormatError("trace: move dimension mismatch");
            if (mv.sign != 1 && mv.sign != -1) throw TraceFormatError("trace: bad sign");
            t.moves.push_back(std::move(mv));
        }
    } catch (const nlohmann::json::exception& e) {
        throw TraceFormatError(std::string("trace: malformed line: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw TraceFormatError(std::string("trace: invalid parameters: ") + e.what());
    }
    return t;
}

inline std::string trace_to_string(const MoveTrace& t) {
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

inline MoveTrace trace_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_trace(is);
}

}  // namespace conway
