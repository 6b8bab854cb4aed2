// Wire types mirroring the service JSON API.

export interface TabRecord {
  url: string;
  title: string;
}

export interface DestinationGuess {
  destination: string;
  confidence: number;
  evidence: [string, string][];
}

export type Genre = 'historical' | 'amusement' | 'natural' | 'cultural';

export const GENRES: Genre[] = ['historical', 'amusement', 'natural', 'cultural'];

export type SliderValues = Record<Genre, number>;

export interface ActivityData {
  time: string;
  name: string;
  note: string;
}

export interface DayPlanData {
  day: number;
  activities: ActivityData[];
  notes: string[];
}

export interface ItineraryData {
  destination: string;
  days: DayPlanData[];
  mode: 'with-preferences' | 'without-preferences';
  raw: string;
}

export interface DictionaryEntry {
  name: string;
  description: string;
  source: string;
}

export interface PlanRecord {
  id: string;
  created_at: string;
  destination: string;
  days: number;
  preferences: SliderValues | null;
  inferred: { destination: string; confidence: number } | null;
  dictionary: DictionaryEntry[];
  summaries: Record<string, string>;
  genres: Record<string, Genre>;
  itinerary: ItineraryData;
}

export interface ItineraryMetrics {
  genre_shares: Record<Genre, number>;
  divergence: number;
  mean_activities_per_day: number;
  detail_score: number;
}

export interface CompareResponse {
  report: {
    first: ItineraryMetrics;
    second: ItineraryMetrics;
    preference_weights: Record<Genre, number>;
    divergence_difference: number;
  };
  original: ItineraryData;
  alternative: ItineraryData;
}

export interface PlanRequest {
  destination?: string;
  tabs?: TabRecord[];
  days: number;
  preferences: SliderValues | null;
}
