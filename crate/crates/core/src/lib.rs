pub mod error;
pub mod growth;
pub mod laurent;
pub mod oscillating;
pub mod partition;
pub mod rs;
pub mod sundaram;
pub mod symfunc;
pub mod tableau;

mod search;

pub use error::{Error, Result};
pub use growth::{DescentPicture, GrowthDiagram, RobyResult};
pub use laurent::LaurentPolynomial;
pub use oscillating::{CrystalWord, OscillatingTableau, StepKind};
pub use partition::{covers, Cell, Partition, SkewShape};
pub use rs::PartialInvolution;
pub use sundaram::{SunIntermediate, SunResult};
pub use symfunc::Comparison;
pub use tableau::{KingTableau, SkewTableau, Tableau};
