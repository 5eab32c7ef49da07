#include <sstream>

#include "jasonrs/bdi/types.hpp"

namespace jasonrs::bdi {

std::string to_string(const Event& e) {
    std::string out = logic::to_string(e.trigger);
    switch (e.origin.kind) {
    case EventOrigin::Kind::Percept:
        out += " <percept>";
        break;
    case EventOrigin::Kind::Message:
        out += " <from " + e.origin.sender + ">";
        break;
    case EventOrigin::Kind::Internal:
        if (e.origin.intention != 0) {
            out += " <intention " + std::to_string(e.origin.intention) + ">";
        }
        break;
    }
    return out;
}

std::string to_string(const CycleReport& r) {
    std::ostringstream os;
    os << r.agent << '#' << r.cycle;
    if (r.event) {
        os << " event=" << *r.event;
    }
    if (r.plan) {
        os << " plan=" << *r.plan;
    }
    if (r.intention) {
        os << " intention=" << *r.intention;
    }
    if (r.step) {
        os << " step=" << *r.step;
    }
    for (const auto& n : r.notes) {
        os << " note=\"" << n << '"';
    }
    return os.str();
}

} // namespace jasonrs::bdi
