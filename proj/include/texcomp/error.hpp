#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace texcomp {

enum class ErrorCode {
  kZeroTokens,
  kZeroSentences,
  kInsufficientTokens,
  kInvalidConfig,
  kEmptyTrainingSet,
  kInvalidPercentilePair,
  kInvalidProfile,
  kEmptyResultSet,
  kUnknownLabel,
  kInvalidManifest,
  kIo,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroTokens: return "zero_tokens";
    case ErrorCode::kZeroSentences: return "zero_sentences";
    case ErrorCode::kInsufficientTokens: return "insufficient_tokens";
    case ErrorCode::kInvalidConfig: return "invalid_config";
    case ErrorCode::kEmptyTrainingSet: return "empty_training_set";
    case ErrorCode::kInvalidPercentilePair: return "invalid_percentile_pair";
    case ErrorCode::kInvalidProfile: return "invalid_profile";
    case ErrorCode::kEmptyResultSet: return "empty_result_set";
    case ErrorCode::kUnknownLabel: return "unknown_label";
    case ErrorCode::kInvalidManifest: return "invalid_manifest";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Failure while analyzing one document; carries the document id.
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::string document_id, const std::string& what)
      : Error(code, document_id + ": " + what),
        document_id_(std::move(document_id)) {}

  const std::string& document_id() const noexcept { return document_id_; }

 private:
  std::string document_id_;
};

}  // namespace texcomp
