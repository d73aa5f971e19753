#include "braidkit/fpgroup.hpp"

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

// Accumulates relators for a fixed alphabet; relations L = R become L R^-1.
class Builder {
  public:
    explicit Builder(std::vector<std::string> names)
        : names_(std::move(names)), size_(static_cast<int>(names_.size())) {}

    Word gen(int index0) const { return Word::generator(index0 + 1, size_); }
    Word one() const { return Word(size_); }

    void relator(const Word& w) {
        if (!w.empty()) relators_.push_back(w);
    }
    void relation(const Word& lhs, const Word& rhs) { relator(lhs * rhs.inverse()); }

    Presentation finish(Family family) && {
        return Presentation{std::move(names_), std::move(relators_), std::move(family)};
    }

  private:
    std::vector<std::string> names_;
    int size_;
    std::vector<Word> relators_;
};

// sigma_1 ... sigma_{n-2} sigma_{n-1}^2 sigma_{n-2} ... sigma_1 over the
// sigma block starting at `first`.
Word full_loop(const Builder& b, int first, int strands) {
    Word w = b.one();
    if (strands < 2) return w;
    for (int i = 0; i < strands - 2; ++i) w = w * b.gen(first + i);
    w = w * b.gen(first + strands - 2) * b.gen(first + strands - 2);
    for (int i = strands - 3; i >= 0; --i) w = w * b.gen(first + i);
    return w;
}

// Commuting and braid relators on sigma_1..sigma_{n-1} placed at `first`.
void add_artin_relations(Builder& b, int first, int strands) {
    for (int i = 0; i < strands - 1; ++i)
        for (int j = i + 2; j < strands - 1; ++j) {
            const Word si = b.gen(first + i), sj = b.gen(first + j);
            b.relation(si * sj, sj * si);
        }
    for (int i = 0; i + 1 < strands - 1; ++i) {
        const Word si = b.gen(first + i), sk = b.gen(first + i + 1);
        b.relation(si * sk * si, sk * si * sk);
    }
}

std::vector<std::string> sigma_names(int strands) {
    std::vector<std::string> names;
    for (int i = 1; i < strands; ++i) names.push_back("s" + std::to_string(i));
    return names;
}

std::vector<std::string> handle_names(int genus) {
    std::vector<std::string> names;
    for (int i = 1; i <= genus; ++i) {
        names.push_back("a" + std::to_string(i));
        names.push_back("b" + std::to_string(i));
    }
    return names;
}

Presentation orientable(int genus, int strands, bool with_surface_relation, const std::string& surface) {
    if (genus < 0) throw InvalidInput("genus must be >= 0");
    if (strands < 1) throw InvalidInput("strands must be >= 1");
    auto names = handle_names(genus);
    for (auto& s : sigma_names(strands)) names.push_back(std::move(s));
    Builder b(std::move(names));
    const int first_sigma = 2 * genus;
    auto a = [&](int i) { return b.gen(2 * i); };
    auto bb = [&](int i) { return b.gen(2 * i + 1); };
    auto sigma = [&](int j) { return b.gen(first_sigma + j); }; // j 0-based: sigma_{j+1}

    add_artin_relations(b, first_sigma, strands);

    // c_i sigma_j = sigma_j c_i, j >= 2
    for (int i = 0; i < genus; ++i)
        for (const Word& c : {a(i), bb(i)})
            for (int j = 1; j < strands - 1; ++j) b.relation(c * sigma(j), sigma(j) * c);

    if (strands >= 2) {
        const Word s1 = sigma(0), s1i = s1.inverse();
        for (int i = 0; i < genus; ++i)
            for (const Word& c : {a(i), bb(i)}) b.relation(c * s1 * c * s1, s1 * c * s1 * c);
        for (int i = 0; i < genus; ++i) b.relation(a(i) * s1 * bb(i), s1 * bb(i) * s1 * a(i) * s1);
        for (int i = 0; i < genus; ++i)
            for (int j = 0; j < i; ++j)
                for (const Word& ci : {a(i), bb(i)})
                    for (const Word& cj : {a(j), bb(j)})
                        b.relation(ci * s1i * cj * s1, s1i * cj * s1 * ci);
    }

    if (with_surface_relation) {
        Word lhs = b.one();
        for (int i = 0; i < genus; ++i) lhs = lhs * commutator(a(i).inverse(), bb(i));
        b.relation(lhs, full_loop(b, first_sigma, strands));
    }
    return std::move(b).finish(Family{surface, genus, strands});
}

} // namespace

std::vector<int> Presentation::braid_generator_indices() const {
    std::vector<int> out;
    if (!family) return out;
    const auto& f = *family;
    int first = -1, count = 0;
    if (f.surface == "artin") {
        first = 0;
        count = f.strands - 1;
    } else if (f.surface == "closed-orientable" || f.surface == "boundary-orientable") {
        first = 2 * f.genus;
        count = f.strands - 1;
    } else if (f.surface == "nonorientable") {
        first = f.genus;
        count = f.strands - 1;
    } else if (f.surface == "class2-quotient") {
        first = 2 * f.genus;
        count = 1;
    }
    for (int i = 0; i < count && first + i < generator_count(); ++i) out.push_back(first + i);
    return out;
}

Presentation artin_presentation(int strands) {
    if (strands < 1) throw InvalidInput("strands must be >= 1");
    Builder b(sigma_names(strands));
    add_artin_relations(b, 0, strands);
    return std::move(b).finish(Family{"artin", 0, strands});
}

Presentation closed_orientable(int genus, int strands) {
    return orientable(genus, strands, true, "closed-orientable");
}

Presentation boundary_orientable(int genus, int strands) {
    if (genus < 1) throw InvalidInput("boundary family needs genus >= 1 (genus 0 with one boundary is the disc)");
    return orientable(genus, strands, false, "boundary-orientable");
}

Presentation nonorientable(int genus, int strands) {
    if (genus < 1) throw InvalidInput("non-orientable genus must be >= 1");
    if (strands < 1) throw InvalidInput("strands must be >= 1");
    std::vector<std::string> names;
    for (int i = 1; i <= genus; ++i) names.push_back("r" + std::to_string(i));
    for (auto& s : sigma_names(strands)) names.push_back(std::move(s));
    Builder b(std::move(names));
    const int first_sigma = genus;
    auto rho = [&](int i) { return b.gen(i); };
    auto sigma = [&](int j) { return b.gen(first_sigma + j); };

    add_artin_relations(b, first_sigma, strands);
    for (int i = 0; i < genus; ++i)
        for (int j = 1; j < strands - 1; ++j) b.relation(rho(i) * sigma(j), sigma(j) * rho(i));
    if (strands >= 2) {
        const Word s1 = sigma(0), s1i = s1.inverse();
        for (int i = 0; i < genus; ++i)
            b.relation(rho(i) * s1 * rho(i) * s1, s1i * rho(i) * s1 * rho(i));
        for (int r = 0; r < genus; ++r)
            for (int s = 0; s < r; ++s) b.relation(rho(r) * s1i * rho(s) * s1, s1i * rho(s) * s1 * rho(r));
    }
    Word lhs = b.one();
    for (int i = 0; i < genus; ++i) lhs = lhs * rho(i).power(-2);
    b.relation(lhs, full_loop(b, first_sigma, strands));
    return std::move(b).finish(Family{"nonorientable", genus, strands});
}

Presentation class2_quotient_group(int genus, int sigma_order) {
    if (genus < 1) throw InvalidInput("genus must be >= 1");
    if (sigma_order < 1) throw InvalidInput("sigma order must be >= 1");
    auto names = handle_names(genus);
    names.push_back("s");
    Builder b(std::move(names));
    const int total = 2 * genus + 1;
    const Word s = b.gen(2 * genus);
    b.relator(s.power(sigma_order));
    for (int x = 0; x < total; ++x)
        for (int y = x + 1; y < total; ++y) {
            if (x % 2 == 0 && y == x + 1 && y < 2 * genus) continue; // (a_i, b_i)
            b.relator(commutator(b.gen(x), b.gen(y)));
        }
    for (int i = 0; i < genus; ++i) b.relation(commutator(b.gen(2 * i), b.gen(2 * i + 1)), s.power(2));
    return std::move(b).finish(Family{"class2-quotient", genus, 0});
}

Presentation class2_quotient_presentation(int genus, int strands) {
    if (strands < 3) throw InvalidInput("class-2 quotient presentation is stated for n >= 3");
    Presentation p = class2_quotient_group(genus, 2 * (strands - 1 + genus));
    p.family->strands = strands;
    return p;
}

Presentation add_relators(const Presentation& p, const std::vector<Word>& extra) {
    Presentation q = p;
    for (const Word& w : extra) {
        if (w.alphabet_size() != p.generator_count())
            throw InvalidInput("extra relator over alphabet of size " + std::to_string(w.alphabet_size()) +
                               ", presentation has " + std::to_string(p.generator_count()) + " generators");
        Word r = Word::reduce(w.letters(), p.generator_count());
        if (!r.empty()) q.relators.push_back(std::move(r));
    }
    return q;
}

Presentation build_family(const std::string& surface, int genus, int strands, int boundaries) {
    if (surface == "closed-orientable") return closed_orientable(genus, strands);
    if (surface == "boundary-orientable") {
        if (boundaries != 1)
            throw Unsupported("unsupported-family: boundary-orientable with b = " + std::to_string(boundaries) +
                              " (only b = 1 is modelled)");
        return boundary_orientable(genus, strands);
    }
    if (surface == "nonorientable") return nonorientable(genus, strands);
    if (surface == "artin") return artin_presentation(strands);
    if (surface == "class2-quotient") return class2_quotient_presentation(genus, strands);
    throw Unsupported("unsupported-family: unknown surface '" + surface + "'");
}

nlohmann::json to_json(const Presentation& p) {
    nlohmann::json j;
    j["generators"] = p.generators;
    j["relators"] = nlohmann::json::array();
    for (const Word& w : p.relators) j["relators"].push_back(to_json(w));
    if (p.family)
        j["family"] = {{"surface", p.family->surface}, {"genus", p.family->genus}, {"strands", p.family->strands}};
    return j;
}

Presentation presentation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
        throw InvalidInput("presentation JSON needs 'generators' and 'relators'");
    Presentation p;
    for (const auto& g : j.at("generators")) {
        if (!g.is_string()) throw InvalidInput("generator names must be strings");
        p.generators.push_back(g.get<std::string>());
    }
    const int n = p.generator_count();
    for (const auto& r : j.at("relators")) {
        Word w = word_from_json(r, n);
        if (!w.empty()) p.relators.push_back(std::move(w));
    }
    if (j.contains("family") && j["family"].is_object()) {
        const auto& f = j["family"];
        p.family = Family{f.value("surface", std::string("custom")), f.value("genus", 0), f.value("strands", 0)};
    }
    return p;
}

} // namespace braidkit
