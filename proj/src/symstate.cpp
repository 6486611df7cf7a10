#include "symstate.hpp"

#include <sstream>

namespace gvc {

HeapChunk HeapChunk::fieldChunk(TermPtr recv, std::string field, TermPtr snap) {
    HeapChunk c;
    c.kind = Kind::Field;
    c.recv = std::move(recv);
    c.field = std::move(field);
    c.snap = std::move(snap);
    return c;
}

HeapChunk HeapChunk::predChunk(std::string pred, std::vector<TermPtr> args, TermPtr snap) {
    HeapChunk c;
    c.kind = Kind::Pred;
    c.pred = std::move(pred);
    c.args = std::move(args);
    c.snap = std::move(snap);
    return c;
}

bool chunkEquals(const HeapChunk& a, const HeapChunk& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == HeapChunk::Kind::Field)
        return a.field == b.field && termEquals(a.recv, b.recv) && termEquals(a.snap, b.snap);
    return a.pred == b.pred && termVectorEquals(a.args, b.args) && termEquals(a.snap, b.snap);
}

std::string chunkToString(const HeapChunk& c) {
    std::ostringstream os;
    if (c.kind == HeapChunk::Kind::Field) {
        os << "acc(" << termToString(c.recv) << "." << c.field << " -> "
           << termToString(c.snap) << ")";
    } else {
        os << c.pred << "(";
        for (size_t i = 0; i < c.args.size(); ++i) {
            if (i) os << ", ";
            os << termToString(c.args[i]);
        }
        os << "; " << termToString(c.snap) << ")";
    }
    return os.str();
}

std::string heapToString(const Heap& h) {
    std::string s = "{";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) s += ", ";
        s += chunkToString(h[i]);
    }
    return s + "}";
}

ChunkKey ChunkKey::forField(TermPtr recv, std::string field) {
    ChunkKey k;
    k.kind = HeapChunk::Kind::Field;
    k.recv = std::move(recv);
    k.field = std::move(field);
    return k;
}

ChunkKey ChunkKey::forPred(std::string pred, std::vector<TermPtr> args) {
    ChunkKey k;
    k.kind = HeapChunk::Kind::Pred;
    k.pred = std::move(pred);
    k.args = std::move(args);
    return k;
}

namespace {

/// Syntactic fast path, then oracle equality. Unknown is "no".
bool termsProvablyEqual(const TermPtr& a, const TermPtr& b, const std::vector<TermPtr>& pc,
                        Oracle& oracle) {
    if (termEquals(a, b)) return true;
    return oracle.entails(pc, mkEq(a, b)) == Verdict::Valid;
}

bool keyMatches(const HeapChunk& c, const ChunkKey& key, const std::vector<TermPtr>& pc,
                Oracle& oracle) {
    if (c.kind != key.kind) return false;
    if (c.kind == HeapChunk::Kind::Field) {
        return c.field == key.field && termsProvablyEqual(c.recv, key.recv, pc, oracle);
    }
    if (c.pred != key.pred || c.args.size() != key.args.size()) return false;
    for (size_t i = 0; i < c.args.size(); ++i)
        if (!termsProvablyEqual(c.args[i], key.args[i], pc, oracle)) return false;
    return true;
}

} // namespace

std::variant<Heap, SeparationConflict> addChunk(const Heap& heap, HeapChunk chunk,
                                                const std::vector<TermPtr>& pc,
                                                Oracle& oracle) {
    if (chunk.kind == HeapChunk::Kind::Field) {
        for (const auto& c : heap) {
            if (c.kind != HeapChunk::Kind::Field || c.field != chunk.field) continue;
            if (termsProvablyEqual(c.recv, chunk.recv, pc, oracle)) {
                return SeparationConflict{"duplicate permission to field '" + chunk.field +
                                          "' of " + termToString(chunk.recv)};
            }
        }
    }
    Heap out = heap;
    out.push_back(std::move(chunk));
    return out;
}

std::optional<size_t> findChunkIn(const Heap& h, const ChunkKey& key,
                                  const std::vector<TermPtr>& pc, Oracle& oracle) {
    for (size_t i = 0; i < h.size(); ++i) {
        if (keyMatches(h[i], key, pc, oracle)) return i;
    }
    return std::nullopt;
}

std::optional<FoundChunk> findChunk(const Heap& h, const Heap& hOpt, const ChunkKey& key,
                                    const std::vector<TermPtr>& pc, Oracle& oracle) {
    if (auto i = findChunkIn(h, key, pc, oracle))
        return FoundChunk{h[*i], FoundIn::Heap, *i};
    if (auto i = findChunkIn(hOpt, key, pc, oracle))
        return FoundChunk{hOpt[*i], FoundIn::OptHeap, *i};
    return std::nullopt;
}

Heap removeChunkAt(const Heap& h, size_t index) {
    Heap out;
    out.reserve(h.size() - 1);
    for (size_t i = 0; i < h.size(); ++i)
        if (i != index) out.push_back(h[i]);
    return out;
}

void SymState::assume(const TermPtr& fact) {
    if (fact->kind == TermNode::Kind::BoolLit && fact->boolVal) return;
    if (assumed(fact)) return;
    pc.push_back(fact);
}

bool SymState::assumed(const TermPtr& fact) const {
    for (const auto& t : pc)
        if (termEquals(t, fact)) return true;
    return false;
}

std::string SymState::summary() const {
    std::ostringstream os;
    os << (isImprecise ? "imprecise" : "precise") << " |h|=" << heap.size()
       << " |h?|=" << optHeap.size() << " |pc|=" << pc.size()
       << " |checks|=" << checks.checks.size();
    return os.str();
}

} // namespace gvc
