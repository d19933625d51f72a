#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crewrost/errors.hpp"

namespace crew {

constexpr int kMinutesPerDay = 1440;

// Calendar day (1-based) containing an absolute minute of the month.
inline int day_of_minute(int minute) { return minute / kMinutesPerDay + 1; }

struct Flight {
    std::string id;
    int departure_minute = 0;  // minutes since month start
    int arrival_minute = 0;
    std::string origin;
    std::string destination;
};

struct Pairing {
    std::string id;
    std::string base;
    std::vector<Flight> flights;  // chronological, connected, base-to-base
    int start_minute = 0;         // check-in; <= first departure
    int end_minute = 0;           // release; >= last arrival
    int work_minutes = 0;         // flight time plus briefing/debriefing credit

    int first_day() const { return day_of_minute(start_minute); }
    // A pairing releasing exactly at midnight still belongs to the ending day.
    int last_day() const { return day_of_minute(end_minute - 1); }
    int span_days() const { return last_day() - first_day() + 1; }
    int flight_count() const { return static_cast<int>(flights.size()); }

    // Calendar days with at least one departing flight.
    std::set<int> duty_days() const {
        std::set<int> days;
        for (const auto& f : flights) days.insert(day_of_minute(f.departure_minute));
        return days;
    }
    int duty_day_count() const { return static_cast<int>(duty_days().size()); }

    bool covers_day(int day) const { return day >= first_day() && day <= last_day(); }
};

struct Pilot {
    std::string id;
    std::string base;
    std::map<std::string, double> preferred_flights;  // flight id -> weight
    std::map<int, double> preferred_vacations;        // start day -> weight (3-day span)
    std::set<int> preassigned_days_off;
};

struct RuleParams {
    int max_consecutive_duties = 6;       // days
    int min_days_off = 10;                // per month
    int min_rest_hours = 12;              // between consecutive pairings
    int max_flight_hours = 85;            // per month
    double unassigned_flight_penalty = 100.0;
    double missed_day_off_penalty = 1e6;

    void validate() const;
};

struct Instance {
    std::string name;
    int horizon_days = 31;
    std::vector<std::string> bases;
    std::vector<Pilot> pilots;
    std::vector<Pairing> pairings;
    RuleParams rules;

    int pairing_index(const std::string& id) const;  // -1 if unknown
    int pilot_index(const std::string& id) const;
    const Pairing& pairing(const std::string& id) const;

    // Throws Error on any structural inconsistency.
    void validate() const;
};

struct Activity {
    enum class Kind { Pairing, DayOff, Vacation };
    Kind kind = Kind::DayOff;
    std::string pairing_id;  // for Kind::Pairing
    int day = 0;             // day off, or vacation start day

    static Activity pairing(std::string id) {
        Activity a;
        a.kind = Kind::Pairing;
        a.pairing_id = std::move(id);
        return a;
    }
    static Activity day_off(int day) {
        Activity a;
        a.kind = Kind::DayOff;
        a.day = day;
        return a;
    }
    static Activity vacation(int start_day) {
        Activity a;
        a.kind = Kind::Vacation;
        a.day = start_day;
        return a;
    }
};

// One pilot's month. `assigned == false` marks the explicit empty-schedule
// state: the pilot receives nothing, and their preassigned days off count as
// missed. An assigned schedule may leave days without activities; such days
// are implicit rest days.
struct Schedule {
    std::string pilot_id;
    bool assigned = true;
    std::vector<Activity> activities;

    static Schedule empty_marker(std::string pilot_id) {
        Schedule s;
        s.pilot_id = std::move(pilot_id);
        s.assigned = false;
        return s;
    }
};

struct Roster {
    std::vector<Schedule> schedules;  // one per pilot
    std::set<std::string> unassigned_pairings;
    std::set<std::pair<std::string, int>> missed_preassigned;  // (pilot, day)
};

struct ObjectiveBreakdown {
    double satisfaction_total = 0.0;
    double flight_penalty = 0.0;
    double dayoff_penalty = 0.0;
    double objective = 0.0;  // satisfaction - flight_penalty - dayoff_penalty
};

enum class ViolationKind {
    MaxConsecutiveDuties,
    FlightTimeExceeded,
    InsufficientRest,
    InsufficientDaysOff,
    PreassignedDayViolated,
    ActivityOverlap,
    ActivityOutOfOrder,
    ActivityOutOfHorizon,
};

struct Violation {
    ViolationKind kind;
    std::string detail;
};

const char* violation_name(ViolationKind kind);

struct RosterReport {
    std::vector<std::string> structural_errors;  // coverage/uniqueness problems
    std::map<std::string, std::vector<Violation>> pilot_violations;
    bool feasible = false;
};

// Lookup used by the checkers; built once per instance.
class PairingIndex {
public:
    explicit PairingIndex(const Instance& instance);
    const Pairing* find(const std::string& id) const;
    const Pairing& require(const std::string& id) const;  // throws ContractViolation

private:
    std::map<std::string, const Pairing*> by_id_;
};

// Sum of granted preference weights: preferred flights contained in the
// schedule's pairings plus preferred vacations whose start day matches a
// vacation activity exactly.
double schedule_satisfaction(const Pilot& pilot, const Schedule& schedule,
                             const PairingIndex& pairings);

ObjectiveBreakdown roster_objective(const Instance& instance, const Roster& roster);

std::vector<Violation> check_schedule(const Pilot& pilot, const Schedule& schedule,
                                      const RuleParams& rules, int horizon_days,
                                      const PairingIndex& pairings);

RosterReport check_roster(const Instance& instance, const Roster& roster);

// Calendar days covered by an activity.
std::vector<int> activity_days(const Activity& activity, const PairingIndex& pairings);

// Recomputes unassigned_pairings and missed_preassigned from the schedules.
void refresh_roster_footprint(const Instance& instance, Roster& roster);

}  // namespace crew
