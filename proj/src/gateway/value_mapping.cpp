#include "jasonrs/gateway/value_mapping.hpp"

#include "jasonrs/logic/decimal.hpp"

namespace jasonrs::gateway {

using logic::Term;

Term scalar_to_term(const Json& value) {
    switch (value.type()) {
    case Json::value_t::boolean:
        return Term::atom(value.get<bool>() ? "true" : "false");
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned:
    case Json::value_t::number_float: {
        auto d = logic::Decimal::parse(value.dump());
        if (!d) {
            throw HttpError(422, "unmappable_value", "number not representable: " + value.dump());
        }
        return Term::num(*d);
    }
    case Json::value_t::string: {
        const auto& text = value.get_ref<const std::string&>();
        if (logic::is_identifier(text)) {
            return Term::atom(text);
        }
        return Term::str(text);
    }
    case Json::value_t::null:
        throw HttpError(422, "unmappable_value", "null has no term representation");
    default:
        throw HttpError(400, "malformed_body", "data must be a scalar, got " + std::string(value.type_name()));
    }
}

Term percept_value(const Json& body) {
    if (!body.is_object() || body.size() != 1 || !body.contains("data")) {
        throw HttpError(400, "malformed_body", R"(body must be exactly {"data": <scalar>})");
    }
    return scalar_to_term(body.at("data"));
}

} // namespace jasonrs::gateway
