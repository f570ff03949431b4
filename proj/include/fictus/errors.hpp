#pragma once

#include <stdexcept>
#include <string>

namespace fictus {

enum class errc {
    invalid_config,
    config_infeasible,
    name_pool_exhausted,
    unknown_predicate,
    unknown_relation,
    unknown_person,
    depth_too_small,
    unsatisfiable,
    too_large,
    malformed_article,
    parse_error,
    io_failure,
    integrity_mismatch,
    version_unsupported,
    missing_gold,
    duplicate_prediction,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_config: return "InvalidConfig";
        case errc::config_infeasible: return "ConfigInfeasible";
        case errc::name_pool_exhausted: return "NamePoolExhausted";
        case errc::unknown_predicate: return "UnknownPredicate";
        case errc::unknown_relation: return "UnknownRelation";
        case errc::unknown_person: return "UnknownPerson";
        case errc::depth_too_small: return "DepthTooSmall";
        case errc::unsatisfiable: return "Unsatisfiable";
        case errc::too_large: return "TooLarge";
        case errc::malformed_article: return "MalformedArticle";
        case errc::parse_error: return "ParseError";
        case errc::io_failure: return "IoFailure";
        case errc::integrity_mismatch: return "IntegrityMismatch";
        case errc::version_unsupported: return "VersionUnsupported";
        case errc::missing_gold: return "MissingGold";
        case errc::duplicate_prediction: return "DuplicatePredictionId";
    }
    return "Error";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace fictus
