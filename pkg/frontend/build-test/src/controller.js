/**
 * DOM-free interaction state machine for the console.
 *
 * Every Punjabi string in the state originated in a server response; the
 * UI layer only displays it.  The busy flag guards against overlapping
 * convert/speak requests, and editing the input invalidates the shown
 * translation before any new request completes.
 */
import { ApiError } from "./api.js";
export function initialState() {
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
export class Controller {
    deps;
    state = initialState();
    constructor(deps) {
        this.deps = deps;
    }
    snapshot() {
        return { ...this.state, chunks: [...this.state.chunks] };
    }
    canConvert() {
        return this.state.inputText.trim() !== "" && !this.state.busy;
    }
    canSpeak() {
        return this.speakTarget() !== "" && !this.state.busy;
    }
    /** "en" speaks the typed input, "pa" speaks the server's translation. */
    speakTarget() {
        return this.state.languageSelection === "en"
            ? this.state.inputText.trim()
            : this.state.translation;
    }
    setInput(text) {
        this.state.inputText = text;
        // the old translation no longer describes the input
        this.state.translation = "";
        this.state.chunks = [];
        this.state.appliedRules = [];
        this.state.oovCount = 0;
        this.state.lastError = "";
        this.notify();
    }
    setLanguage(language) {
        this.state.languageSelection = language;
        this.notify();
    }
    async convert() {
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
        }
        catch (error) {
            this.state.lastError = error instanceof ApiError ? error.code : "network";
        }
        finally {
            this.state.busy = false;
            this.notify();
        }
    }
    async speak() {
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
        }
        catch (error) {
            this.state.lastError = error instanceof ApiError ? error.code : "network";
        }
        finally {
            this.state.busy = false;
            this.notify();
        }
    }
    notify() {
        this.deps.render(this.snapshot());
    }
}
