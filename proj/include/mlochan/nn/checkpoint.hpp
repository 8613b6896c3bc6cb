#ifndef MLOCHAN_NN_CHECKPOINT_HPP
#define MLOCHAN_NN_CHECKPOINT_HPP

#include <filesystem>

#include "mlochan/nn/qnetwork.hpp"

namespace mlochan::nn {

/// Versioned binary checkpoint: magic, format version, network dimensions,
/// then every parameter tensor with a shape header. Round-trips bit-exactly.
void save_checkpoint(const QNetworkParams& params, const std::filesystem::path& file);
QNetworkParams load_checkpoint(const std::filesystem::path& file);

}  // namespace mlochan::nn

#endif
