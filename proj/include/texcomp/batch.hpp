#pragma once

// Parallel per-document analysis over a manifest. Output order never depends
// on the thread count: documents and failures are sorted by id.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "texcomp/corpus.hpp"
#include "texcomp/manifest.hpp"

namespace texcomp {

struct DocumentFailure {
  std::string id;
  std::string subcorpus;
  std::string path;
  ErrorCode code = ErrorCode::kIo;
  std::string message;

  bool operator==(const DocumentFailure&) const = default;
};

struct BatchResult {
  std::vector<DocumentResult> documents;
  std::vector<DocumentFailure> failures;
};

inline BatchResult analyze_batch(std::span<const ManifestEntry> entries,
                                 const AnalysisConfig& config,
                                 const ThresholdProfile& profile,
                                 unsigned threads = 1) {
  config.validate();
  profile.validate();

  struct Slot {
    std::optional<DocumentResult> result;
    std::optional<DocumentFailure> failure;
  };
  std::vector<Slot> slots(entries.size());

  const auto work = [&](std::size_t i) {
    const ManifestEntry& e = entries[i];
    try {
      const std::string text = read_text_file(e.resolved);
      slots[i].result = analyze_document(text, e.id, e.subcorpus, config, profile);
    } catch (const Error& err) {
      slots[i].failure = DocumentFailure{e.id, e.subcorpus, e.path, err.code(), err.what()};
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(entries.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
      });
    }
  }

  BatchResult out;
  for (Slot& s : slots) {
    if (s.result) out.documents.push_back(std::move(*s.result));
    if (s.failure) out.failures.push_back(std::move(*s.failure));
  }
  sort_results(out.documents);
  std::sort(out.failures.begin(), out.failures.end(),
            [](const DocumentFailure& a, const DocumentFailure& b) { return a.id < b.id; });
  return out;
}

}  // namespace texcomp
