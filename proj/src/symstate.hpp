#pragma once

#include "checks.hpp"
#include "oracle.hpp"
#include "term.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gvc {

/// Unit of permission in the symbolic heaps: either a field chunk
/// (receiver, field, value snapshot) or an iso-recursive predicate chunk.
struct HeapChunk {
    enum class Kind { Field, Pred };

    Kind kind{};
    TermPtr recv;              // Field
    std::string field;         // Field
    std::string pred;          // Pred
    std::vector<TermPtr> args; // Pred
    TermPtr snap;

    static HeapChunk fieldChunk(TermPtr recv, std::string field, TermPtr snap);
    static HeapChunk predChunk(std::string pred, std::vector<TermPtr> args, TermPtr snap);
};

bool chunkEquals(const HeapChunk& a, const HeapChunk& b);
std::string chunkToString(const HeapChunk& c);

/// Ordered set of chunks; insertion order is the iteration order, which
/// keeps check emission and traces reproducible.
using Heap = std::vector<HeapChunk>;

std::string heapToString(const Heap& h);

/// Lookup key: either (receiver, field) or (predicate, args).
struct ChunkKey {
    HeapChunk::Kind kind{};
    TermPtr recv;
    std::string field;
    std::string pred;
    std::vector<TermPtr> args;

    static ChunkKey forField(TermPtr recv, std::string field);
    static ChunkKey forPred(std::string pred, std::vector<TermPtr> args);
};

struct SeparationConflict {
    std::string detail;
};

/// Adds a field or predicate chunk. Fails only when an existing field chunk
/// has a provably equal (receiver, field); predicate chunks may structurally
/// overlap and are never conflict-checked.
std::variant<Heap, SeparationConflict> addChunk(const Heap& heap, HeapChunk chunk,
                                                const std::vector<TermPtr>& pc,
                                                Oracle& oracle);

enum class FoundIn { Heap, OptHeap };

struct FoundChunk {
    HeapChunk chunk;
    FoundIn where{};
    size_t index = 0;
};

/// Searches h first, then h?. A chunk matches when its receiver/args are
/// syntactically identical or the oracle proves them equal; Unknown is
/// conservatively treated as no match.
std::optional<FoundChunk> findChunk(const Heap& h, const Heap& hOpt, const ChunkKey& key,
                                    const std::vector<TermPtr>& pc, Oracle& oracle);

/// Match against a single heap (used for consume working heaps).
std::optional<size_t> findChunkIn(const Heap& h, const ChunkKey& key,
                                  const std::vector<TermPtr>& pc, Oracle& oracle);

Heap removeChunkAt(const Heap& h, size_t index);

/// Symbolic state sigma. Copied wholesale at branch points; all members are
/// value types.
struct SymState {
    bool isImprecise = false;
    std::map<std::string, TermPtr> store; // gamma
    Heap heap;                            // h
    Heap optHeap;                         // h?
    std::vector<TermPtr> pc;              // pi
    CheckCollector checks;                // R
    std::vector<TermPtr> qvs;             // quantified vars; empty in this language
    std::map<std::string, int> unfoldingDepth;

    void assume(const TermPtr& fact);
    bool assumed(const TermPtr& fact) const;
    std::string summary() const;
};

} // namespace gvc
