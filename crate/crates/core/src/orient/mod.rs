//! Constructive proper orientation of outerplanar graphs.

pub mod drivers;
pub mod gadget;
pub mod plan;
pub mod state;
pub mod templates;

pub use drivers::{
    orient_2connected, orient_auto, orient_block, orient_block_rooted, orient_bridgeless,
    orient_in_mode, orient_treefree, Mode, Oriented,
};
pub use gadget::{run_fan, FanRun};
pub use plan::{build_plan, detect_fan, ConstructionPlan, FanDescriptor};
pub use state::{FanVariant, OrienterState, OrienterStats};
pub use templates::PathTemplate;
