#include "bunkbed/model.hpp"

#include "bunkbed/errors.hpp"

namespace bunkbed {

Rational EdgeModel::check(Rational p) {
    if (p < Rational::zero() || p > Rational::one())
        throw Error("edge probability out of [0,1]: " + p.str());
    return p;
}

EdgeModel uniform_model(const BunkbedGraph& bb, Rational p) { return EdgeModel(bb, p); }

EdgeModel conditioned_model(const BunkbedGraph& bb, const std::set<std::string>& T,
                            Rational p) {
    EdgeModel m(bb, p);
    for (const auto& label : T)
        m.set(bb.vertical(bb.base().at(label)), Rational::one());
    return m;
}

} // namespace bunkbed
