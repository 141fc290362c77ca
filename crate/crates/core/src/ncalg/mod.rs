//! Truncated free associative algebra, its Hopf structure and the free Lie algebra.

mod hopf;
mod lyndon;
mod poly;
mod series;
mod tensor;
mod word;

pub use hopf::{bch, bch_of_generators, LieElement};
pub use lyndon::{lyndon_basis, lyndon_words, standard_bracket, witt_dimension};
pub use poly::{q, qf, Context, Cyc, CyclicPoly, Lin, NCPoly, Poly, Slot, Q};
pub use series::{ad_series, bernoulli, Series};
pub use tensor::{CycMixLeft, CycMixRight, CycTensor, Tensor, TensorPoly};
pub use word::{words_of_degree, words_up_to, Word};
