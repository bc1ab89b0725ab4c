#include "hyperlift/error.hpp"
#include "hyperlift/fq.hpp"
#include "hyperlift/fq_poly.hpp"

namespace hyperlift {

FieldEmbedding::FieldEmbedding(FqCtxPtr src, FqCtxPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->p() != dst_->p() || dst_->m() % src_->m() != 0) {
    throw InvalidInput("cannot embed " + src_->describe() + " into " + dst_->describe());
  }
  if (src_->same_field(*dst_)) {
    gen_image_ = FqElem::generator(dst_);
  } else if (src_->m() == 1) {
    gen_image_ = FqElem::zero(dst_);
  } else {
    std::vector<std::int64_t> mod;
    for (auto c : src_->modulus()) mod.push_back(static_cast<std::int64_t>(c));
    const auto roots = roots_in_field(FqPoly::from_ints(dst_, mod));
    if (roots.empty()) throw InternalError("source modulus has no root in the target field");
    gen_image_ = roots.front();
  }
  powers_.reserve(src_->m());
  FqElem acc = FqElem::one(dst_);
  for (int i = 0; i < src_->m(); ++i) {
    powers_.push_back(acc);
    acc *= gen_image_;
  }
}

FqElem FieldEmbedding::operator()(const FqElem& x) const {
  if (!x.valid() || !x.ctx()->same_field(*src_)) throw InvalidInput("element is not in the embedding's source field");
  FqElem r = FqElem::zero(dst_);
  for (int i = 0; i < src_->m(); ++i) {
    const auto c = x.coeffs()[i];
    if (c != 0) r += powers_[i] * FqElem(dst_, static_cast<std::int64_t>(c));
  }
  return r;
}

FqElem fq_embed(const FqCtxPtr& src, const FqCtxPtr& dst, const FqElem& x) { return FieldEmbedding(src, dst)(x); }

}  // namespace hyperlift
