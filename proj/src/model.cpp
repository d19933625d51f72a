#include "crewrost/model.hpp"

#include <algorithm>
#include <sstream>

namespace crew {

void RuleParams::validate() const {
    if (max_consecutive_duties <= 0 || min_days_off <= 0 || min_rest_hours <= 0 ||
        max_flight_hours <= 0 || unassigned_flight_penalty <= 0.0 ||
        missed_day_off_penalty <= 0.0) {
        throw Error("rule parameters must all be strictly positive");
    }
}

int Instance::pairing_index(const std::string& id) const {
    for (std::size_t i = 0; i < pairings.size(); ++i)
        if (pairings[i].id == id) return static_cast<int>(i);
    return -1;
}

int Instance::pilot_index(const std::string& id) const {
    for (std::size_t i = 0; i < pilots.size(); ++i)
        if (pilots[i].id == id) return static_cast<int>(i);
    return -1;
}

const Pairing& Instance::pairing(const std::string& id) const {
    const int idx = pairing_index(id);
    if (idx < 0) throw ContractViolation("unknown pairing id: " + id);
    return pairings[idx];
}

void Instance::validate() const {
    rules.validate();
    if (horizon_days < 1) throw Error("horizon_days must be positive");
    std::set<std::string> base_set(bases.begin(), bases.end());
    std::set<std::string> pairing_ids;
    const int horizon_end = horizon_days * kMinutesPerDay;
    for (const auto& w : pairings) {
        if (!pairing_ids.insert(w.id).second)
            throw Error("duplicate pairing id: " + w.id);
        if (!base_set.count(w.base))
            throw Error("pairing " + w.id + " references unknown base " + w.base);
        if (w.flights.empty()) throw Error("pairing " + w.id + " has no flights");
        if (w.start_minute > w.flights.front().departure_minute ||
            w.end_minute < w.flights.back().arrival_minute)
            throw Error("pairing " + w.id + " span does not contain its flights");
        if (w.start_minute < 0 || w.end_minute > horizon_end)
            throw Error("pairing " + w.id + " leaves the horizon");
        if (w.flights.front().origin != w.base || w.flights.back().destination != w.base)
            throw Error("pairing " + w.id + " does not start and end at its base");
        for (std::size_t i = 0; i < w.flights.size(); ++i) {
            const Flight& f = w.flights[i];
            if (f.arrival_minute <= f.departure_minute)
                throw Error("flight " + f.id + " arrives before departing");
            if (i > 0) {
                if (w.flights[i - 1].destination != f.origin)
                    throw Error("pairing " + w.id + " has a disconnected flight chain");
                if (f.departure_minute < w.flights[i - 1].arrival_minute)
                    throw Error("pairing " + w.id + " has out-of-order flights");
            }
        }
    }
    std::set<std::string> pilot_ids;
    for (const auto& k : pilots) {
        if (!pilot_ids.insert(k.id).second) throw Error("duplicate pilot id: " + k.id);
        if (!base_set.count(k.base))
            throw Error("pilot " + k.id + " references unknown base " + k.base);
        for (const auto& [start_day, weight] : k.preferred_vacations) {
            (void)weight;
            if (start_day < 1 || start_day + 2 > horizon_days)
                throw Error("pilot " + k.id + " has a vacation preference outside the horizon");
        }
        for (int q : k.preassigned_days_off)
            if (q < 1 || q > horizon_days)
                throw Error("pilot " + k.id + " has a preassigned day off outside the horizon");
    }
}

const char* violation_name(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::MaxConsecutiveDuties: return "max_consecutive_duties";
        case ViolationKind::FlightTimeExceeded: return "flight_time_exceeded";
        case ViolationKind::InsufficientRest: return "insufficient_rest";
        case ViolationKind::InsufficientDaysOff: return "insufficient_days_off";
        case ViolationKind::PreassignedDayViolated: return "preassigned_day_violated";
        case ViolationKind::ActivityOverlap: return "activity_overlap";
        case ViolationKind::ActivityOutOfOrder: return "activity_out_of_order";
        case ViolationKind::ActivityOutOfHorizon: return "activity_out_of_horizon";
    }
    return "unknown";
}

PairingIndex::PairingIndex(const Instance& instance) {
    for (const auto& w : instance.pairings) by_id_[w.id] = &w;
}

const Pairing* PairingIndex::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : it->second;
}

const Pairing& PairingIndex::require(const std::string& id) const {
    const Pairing* w = find(id);
    if (!w) throw ContractViolation("unknown pairing id: " + id);
    return *w;
}

std::vector<int> activity_days(const Activity& activity, const PairingIndex& pairings) {
    std::vector<int> days;
    switch (activity.kind) {
        case Activity::Kind::Pairing: {
            const Pairing& w = pairings.require(activity.pairing_id);
            for (int d = w.first_day(); d <= w.last_day(); ++d) days.push_back(d);
            break;
        }
        case Activity::Kind::DayOff:
            days.push_back(activity.day);
            break;
        case Activity::Kind::Vacation:
            days.push_back(activity.day);
            days.push_back(activity.day + 1);
            days.push_back(activity.day + 2);
            break;
    }
    return days;
}

double schedule_satisfaction(const Pilot& pilot, const Schedule& schedule,
                             const PairingIndex& pairings) {
    if (pilot.id != schedule.pilot_id)
        throw ContractViolation("schedule for pilot " + schedule.pilot_id +
                                " evaluated against pilot " + pilot.id);
    if (!schedule.assigned) return 0.0;
    double score = 0.0;
    for (const auto& a : schedule.activities) {
        if (a.kind == Activity::Kind::Pairing) {
            const Pairing& w = pairings.require(a.pairing_id);
            for (const auto& f : w.flights) {
                auto it = pilot.preferred_flights.find(f.id);
                if (it != pilot.preferred_flights.end()) score += it->second;
            }
        } else if (a.kind == Activity::Kind::Vacation) {
            auto it = pilot.preferred_vacations.find(a.day);
            if (it != pilot.preferred_vacations.end()) score += it->second;
        }
    }
    return score;
}

namespace {

// Days of the month covered by the schedule's pairing spans.
std::set<int> pairing_span_days(const Schedule& schedule, const PairingIndex& pairings) {
    std::set<int> days;
    for (const auto& a : schedule.activities) {
        if (a.kind != Activity::Kind::Pairing) continue;
        const Pairing& w = pairings.require(a.pairing_id);
        for (int d = w.first_day(); d <= w.last_day(); ++d) days.insert(d);
    }
    return days;
}

}  // namespace

void refresh_roster_footprint(const Instance& instance, Roster& roster) {
    PairingIndex pairings(instance);
    roster.unassigned_pairings.clear();
    roster.missed_preassigned.clear();
    std::set<std::string> covered;
    for (const auto& s : roster.schedules) {
        if (!s.assigned) continue;
        for (const auto& a : s.activities)
            if (a.kind == Activity::Kind::Pairing) covered.insert(a.pairing_id);
    }
    for (const auto& w : instance.pairings)
        if (!covered.count(w.id)) roster.unassigned_pairings.insert(w.id);
    for (const auto& s : roster.schedules) {
        const int k = instance.pilot_index(s.pilot_id);
        if (k < 0) continue;
        const Pilot& pilot = instance.pilots[k];
        if (!s.assigned) {
            for (int q : pilot.preassigned_days_off)
                roster.missed_preassigned.insert({pilot.id, q});
            continue;
        }
        const std::set<int> worked = pairing_span_days(s, pairings);
        for (int q : pilot.preassigned_days_off)
            if (worked.count(q)) roster.missed_preassigned.insert({pilot.id, q});
    }
}

ObjectiveBreakdown roster_objective(const Instance& instance, const Roster& roster) {
    PairingIndex pairings(instance);
    ObjectiveBreakdown out;

    std::map<std::string, std::string> covered_by;  // pairing -> pilot
    for (const auto& s : roster.schedules) {
        const int k = instance.pilot_index(s.pilot_id);
        if (k < 0) throw ContractViolation("roster references unknown pilot " + s.pilot_id);
        if (!s.assigned) continue;
        for (const auto& a : s.activities) {
            if (a.kind != Activity::Kind::Pairing) continue;
            auto [it, inserted] = covered_by.insert({a.pairing_id, s.pilot_id});
            if (!inserted)
                throw CoverageError("pairing " + a.pairing_id + " covered by both " +
                                    it->second + " and " + s.pilot_id);
        }
        out.satisfaction_total +=
            schedule_satisfaction(instance.pilots[k], s, pairings);
    }

    double unassigned_flights = 0.0;
    for (const auto& id : roster.unassigned_pairings)
        unassigned_flights += pairings.require(id).flight_count();
    out.flight_penalty = instance.rules.unassigned_flight_penalty * unassigned_flights;
    out.dayoff_penalty =
        instance.rules.missed_day_off_penalty * static_cast<double>(roster.missed_preassigned.size());
    out.objective = out.satisfaction_total - out.flight_penalty - out.dayoff_penalty;
    return out;
}

std::vector<Violation> check_schedule(const Pilot& pilot, const Schedule& schedule,
                                      const RuleParams& rules, int horizon_days,
                                      const PairingIndex& pairings) {
    std::vector<Violation> out;
    if (!schedule.assigned) return out;  // nothing assigned, nothing to violate

    auto add = [&](ViolationKind kind, std::string detail) {
        out.push_back({kind, std::move(detail)});
    };

    // Structural pass: horizon bounds, chronological order, day overlaps.
    std::set<int> used_days;
    int prev_last_day = 0;
    std::vector<const Pairing*> ordered_pairings;
    for (const auto& a : schedule.activities) {
        std::vector<int> days = activity_days(a, pairings);
        if (days.front() < 1 || days.back() > horizon_days) {
            add(ViolationKind::ActivityOutOfHorizon,
                "activity covers day " + std::to_string(days.back()));
            continue;
        }
        if (days.front() <= prev_last_day && prev_last_day != 0)
            add(ViolationKind::ActivityOutOfOrder,
                "activity starting day " + std::to_string(days.front()) +
                    " does not follow the previous one");
        for (int d : days) {
            if (!used_days.insert(d).second)
                add(ViolationKind::ActivityOverlap, "day " + std::to_string(d) + " covered twice");
        }
        prev_last_day = days.back();
        if (a.kind == Activity::Kind::Pairing)
            ordered_pairings.push_back(&pairings.require(a.pairing_id));
    }

    // Monthly flight time.
    int total_work = 0;
    for (const Pairing* w : ordered_pairings) total_work += w->work_minutes;
    if (total_work > rules.max_flight_hours * 60)
        add(ViolationKind::FlightTimeExceeded,
            std::to_string(total_work) + " work minutes exceed " +
                std::to_string(rules.max_flight_hours) + "h");

    // Days off: every day outside a pairing span counts (explicit or not).
    std::set<int> span_days = pairing_span_days(schedule, pairings);
    const int days_off = horizon_days - static_cast<int>(span_days.size());
    if (days_off < rules.min_days_off)
        add(ViolationKind::InsufficientDaysOff,
            std::to_string(days_off) + " days off, need " + std::to_string(rules.min_days_off));

    // Consecutive duties. Pairings chain when there is no full free day
    // between them; a chain accumulates the duty-day count of each pairing,
    // matching the pricing network's consecutive-duty resource.
    int chain_duties = 0;
    const Pairing* prev = nullptr;
    for (const Pairing* w : ordered_pairings) {
        const int duties = w->duty_day_count();
        if (prev && w->first_day() <= prev->last_day() + 1)
            chain_duties += duties;
        else
            chain_duties = duties;
        if (chain_duties > rules.max_consecutive_duties) {
            add(ViolationKind::MaxConsecutiveDuties,
                std::to_string(chain_duties) + " consecutive duties at pairing " + w->id);
            chain_duties = duties;  // report each offending chain once
        }
        prev = w;
    }

    // Post-pairing rest between consecutive pairings.
    for (std::size_t i = 1; i < ordered_pairings.size(); ++i) {
        const int gap = ordered_pairings[i]->start_minute - ordered_pairings[i - 1]->end_minute;
        if (gap < rules.min_rest_hours * 60)
            add(ViolationKind::InsufficientRest,
                "gap of " + std::to_string(gap) + " min before pairing " + ordered_pairings[i]->id);
    }

    // Preassigned days off must be free of pairing work.
    for (int q : pilot.preassigned_days_off)
        if (span_days.count(q))
            add(ViolationKind::PreassignedDayViolated,
                "preassigned day " + std::to_string(q) + " is worked");

    return out;
}

RosterReport check_roster(const Instance& instance, const Roster& roster) {
    RosterReport report;
    PairingIndex pairings(instance);

    std::set<std::string> seen_pilots;
    std::map<std::string, std::string> covered_by;
    bool references_ok = true;
    for (const auto& s : roster.schedules) {
        if (instance.pilot_index(s.pilot_id) < 0) {
            report.structural_errors.push_back("unknown pilot " + s.pilot_id);
            references_ok = false;
            continue;
        }
        if (!seen_pilots.insert(s.pilot_id).second) {
            report.structural_errors.push_back("pilot " + s.pilot_id + " appears twice");
            references_ok = false;
        }
        for (const auto& a : s.activities) {
            if (a.kind != Activity::Kind::Pairing) continue;
            if (!pairings.find(a.pairing_id)) {
                report.structural_errors.push_back("unknown pairing " + a.pairing_id);
                references_ok = false;
                continue;
            }
            auto [it, inserted] = covered_by.insert({a.pairing_id, s.pilot_id});
            if (!inserted)
                report.structural_errors.push_back("pairing " + a.pairing_id +
                                                   " covered by both " + it->second + " and " +
                                                   s.pilot_id);
        }
    }
    for (const auto& k : instance.pilots)
        if (!seen_pilots.count(k.id))
            report.structural_errors.push_back("pilot " + k.id + " missing from roster");

    // Coverage bookkeeping: every pairing is either covered or declared unassigned.
    if (references_ok) {
        for (const auto& w : instance.pairings) {
            const bool covered = covered_by.count(w.id) > 0;
            const bool declared = roster.unassigned_pairings.count(w.id) > 0;
            if (covered && declared)
                report.structural_errors.push_back("pairing " + w.id +
                                                   " both covered and declared unassigned");
            if (!covered && !declared)
                report.structural_errors.push_back("pairing " + w.id + " unaccounted for");
        }
        for (const auto& id : roster.unassigned_pairings)
            if (!pairings.find(id))
                report.structural_errors.push_back("unknown unassigned pairing " + id);
    }

    if (references_ok) {
        for (const auto& s : roster.schedules) {
            const Pilot& pilot = instance.pilots[instance.pilot_index(s.pilot_id)];
            auto violations =
                check_schedule(pilot, s, instance.rules, instance.horizon_days, pairings);
            if (!violations.empty()) report.pilot_violations[s.pilot_id] = std::move(violations);
        }
    }

    report.feasible = report.structural_errors.empty() && report.pilot_violations.empty();
    return report;
}

}  // namespace crew
