use chrono::NaiveDate;

use super::EngineError;

/// Maps calendar dates onto positions in the main word list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DailySchedule {
    start_date: NaiveDate,
    main_list_length: u32,
}

impl DailySchedule {
    pub fn new(start_date: NaiveDate, main_list_length: u32) -> Result<Self, EngineError> {
        if main_list_length == 0 {
            return Err(EngineError::EmptySchedule);
        }
        Ok(Self {
            start_date,
            main_list_length,
        })
    }

    pub fn start_date(&self) -> NaiveDate {
        self.start_date
    }

    pub fn main_list_length(&self) -> u32 {
        self.main_list_length
    }

    pub fn index_for(&self, date: NaiveDate) -> Result<u32, EngineError> {
        daily_index(date, self)
    }
}

/// Days elapsed since the schedule start, wrapped around the list length.
pub fn daily_index(date: NaiveDate, schedule: &DailySchedule) -> Result<u32, EngineError> {
    let elapsed = (date - schedule.start_date).num_days();
    if elapsed < 0 {
        return Err(EngineError::BeforeStart {
            date,
            start: schedule.start_date,
        });
    }
    Ok((elapsed as u64 % u64::from(schedule.main_list_length)) as u32)
}
