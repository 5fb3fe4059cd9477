#include "isozero/errors.hpp"

namespace isozero {

const char* errc_name(errc c) {
    switch (c) {
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::root_index_out_of_range: return "RootIndexOutOfRange";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_argument: return "ZeroArgument";
    case errc::unsupported_degree: return "UnsupportedDegree";
    case errc::unsupported_place: return "UnsupportedPlace";
    case errc::zero_vector: return "ZeroVector";
    case errc::rank_deficient: return "RankDeficient";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_subspace: return "NotASubspace";
    case errc::not_regular: return "NotRegular";
    case errc::anisotropic: return "Anisotropic";
    case errc::budget_exhausted: return "BudgetExhausted";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::no_zero_off_set: return "NoZeroOffSet";
    case errc::dimension_too_small: return "DimensionTooSmall";
    case errc::unsolvable: return "Unsolvable";
    case errc::unknown_profile: return "UnknownProfile";
    case errc::invalid_params: return "InvalidParams";
    case errc::zero_divisor: return "ZeroDivisor";
    case errc::indeterminate_vanishing: return "IndeterminateVanishing";
    case errc::schema_error: return "SchemaError";
    case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

} // namespace isozero
