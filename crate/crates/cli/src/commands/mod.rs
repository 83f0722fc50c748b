pub mod compute;
pub mod export;
pub mod ratio;
pub mod sweep;
pub mod verify;
