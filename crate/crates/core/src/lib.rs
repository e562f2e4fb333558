pub mod chartab;
pub mod cli;
pub mod covers;
pub mod detector;
pub mod groups;
pub mod oracle;
pub mod search;
