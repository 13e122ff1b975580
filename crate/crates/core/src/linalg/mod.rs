//! Exact linear algebra: scalars, spaces, sparse tensors and linear maps.

mod dual;
mod linmap;
mod scalar;
mod space;
mod tensor;

pub use dual::{dual_basis, DualBasis};
pub use linmap::{LinMap, MultTensor};
pub use scalar::{Field, Scalar};
pub use space::{tensor_space, Space};
pub use tensor::{flatten, unflatten, Tensor};
