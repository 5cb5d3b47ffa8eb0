#pragma once

// Process-wide symbol registry. Append-only: a symbol's index never changes
// once registered, so exponent vectors built at different times stay
// comparable (they are kept trimmed of trailing zeros).

#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace reflectq {

using Symbol = int;

class SymbolTable {
  public:
    static SymbolTable& instance() {
        static SymbolTable t;
        return t;
    }

    Symbol intern(const std::string& name) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (!valid_name(name)) throw std::invalid_argument("bad symbol name: " + name);
        Symbol id = static_cast<Symbol>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    bool lookup(const std::string& name, Symbol& out) const {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = index_.find(name);
        if (it == index_.end()) return false;
        out = it->second;
        return true;
    }

    const std::string& name(Symbol s) const {
        std::lock_guard<std::mutex> lk(mu_);
        if (s < 0 || s >= static_cast<Symbol>(names_.size()))
            throw std::out_of_range("unknown symbol id");
        return names_[static_cast<size_t>(s)];
    }

    size_t size() const {
        std::lock_guard<std::mutex> lk(mu_);
        return names_.size();
    }

  private:
    SymbolTable() {
        // Well-known symbols in fixed order; q first so it dominates the
        // term-order tie break and denominators normalize predictably.
        for (const char* n : {"q", "z", "w", "s", "c", "t", "u", "v", "alpha", "dp", "dm", "kp"})
            intern_unlocked(n);
    }
    void intern_unlocked(const std::string& name) {
        names_.push_back(name);
        index_.emplace(name, static_cast<Symbol>(names_.size() - 1));
    }
    static bool valid_name(const std::string& n) {
        if (n.empty()) return false;
        if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
        for (char ch : n)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
        return true;
    }

    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Symbol> index_;
};

inline Symbol sym(const std::string& name) { return SymbolTable::instance().intern(name); }
inline const std::string& sym_name(Symbol s) { return SymbolTable::instance().name(s); }

}  // namespace reflectq
