/**
 * DOM-free interaction state machine for the console.
 *
 * Every Punjabi string in the state originated in a server response; the
 * UI layer only displays it.  The busy flag guards against overlapping
 * convert/speak requests, and editing the input invalidates the shown
 * translation before any new request completes.
 */

import { ApiClient, ApiError, ChunkView, Language } from "./api.js";

export interface UiState {
  inputText: string;
  translation: string;
  chunks: ChunkView[];
  appliedRules: string[];
  oovCount: number;
  languageSelection: Language;
  busy: boolean;
  lastError: string;
}

export function initialState(): UiState {
  return {
    inputText: "",
    translation: "",
    chunks: [],
    appliedRules: [],
    oovCount: 0,
    languageSelection: "en",
    busy: false,
    lastError: "",
  };
}

export interface ControllerDeps {
  api: ApiClient;
  playAudio: (data: ArrayBuffer) => Promise<void>;
  render: (state: UiState) => void;
}

export class Controller {
  private state: UiState = initialState();

  constructor(private readonly deps: ControllerDeps) {}

  snapshot(): UiState {
    return { ...this.state, chunks: [...this.state.chunks] };
  }

  canConvert(): boolean {
    return this.state.inputText.trim() !== "" && !this.state.busy;
  }

  canSpeak(): boolean {
    return this.speakTarget() !== "" && !this.state.busy;
  }

  /** "en" speaks the typed input, "pa" speaks the server's translation. */
  speakTarget(): string {
    return this.state.languageSelection === "en"
      ? this.state.inputText.trim()
      : this.state.translation;
  }

  setInput(text: string): void {
    this.state.inputText = text;
    // the old translation no longer describes the input
    this.state.translation = "";
    this.state.chunks = [];
    this.state.appliedRules = [];
    this.state.oovCount = 0;
    this.state.lastError = "";
    this.notify();
  }

  setLanguage(language: Language): void {
    this.state.languageSelection = language;
    this.notify();
  }

  async convert(): Promise<void> {
    if (!this.canConvert()) {
      return;
    }
    this.state.busy = true;
    this.state.lastError = "";
    this.notify();
    try {
      const result = await this.deps.api.translate(this.state.inputText);
      this.state.translation = result.translation;
      this.state.chunks = result.chunks;
      this.state.appliedRules = result.applied_rules;
      this.state.oovCount = result.oov_count;
      this.state.languageSelection = "pa";
    } catch (error) {
      this.state.lastError = error instanceof ApiError ? error.code : "network";
    } finally {
      this.state.busy = false;
      this.notify();
    }
  }

  async speak(): Promise<void> {
    if (!this.canSpeak()) {
      return;
    }
    const text = this.speakTarget();
    const language = this.state.languageSelection;
    this.state.busy = true;
    this.state.lastError = "";
    this.notify();
    try {
      const audio = await this.deps.api.speak(text, language);
      await this.deps.playAudio(audio);
    } catch (error) {
      this.state.lastError = error instanceof ApiError ? error.code : "network";
    } finally {
      this.state.busy = false;
      this.notify();
    }
  }

  private notify(): void {
    this.deps.render(this.snapshot());
  }
}
