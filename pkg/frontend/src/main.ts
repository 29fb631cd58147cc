import { ApiClient, LinkRow, resolveBaseUrl } from "./api.js";
import { renderBars, renderClassification, renderLinks, renderRecommendations } from "./render.js";
import { Typeahead } from "./typeahead.js";

const client = new ApiClient(resolveBaseUrl(window.location.search));

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

// --- address bar ---------------------------------------------------------

const addressInput = el<HTMLInputElement>("address-input");
const resultsList = el<HTMLUListElement>("results");
const addressError = el<HTMLElement>("address-error");

let currentLinks: LinkRow[] = [];
let selected = -1;

function paintLinks(): void {
  resultsList.innerHTML = renderLinks(currentLinks, selected);
}

const typeahead = new Typeahead(
  (query, signal) => client.predict(query, signal),
  (view) => {
    currentLinks = view.links;
    selected = -1;
    addressError.textContent = view.error ?? "";
    paintLinks();
  },
);

addressInput.addEventListener("input", () => typeahead.input(addressInput.value));
addressInput.addEventListener("keydown", (event) => {
  if (event.key === "ArrowDown") {
    selected = Math.min(selected + 1, currentLinks.length - 1);
    paintLinks();
    event.preventDefault();
  } else if (event.key === "ArrowUp") {
    selected = Math.max(selected - 1, 0);
    paintLinks();
    event.preventDefault();
  } else if (event.key === "Enter" && selected >= 0 && selected < currentLinks.length) {
    window.open(currentLinks[selected].url, "_blank", "noopener");
  }
});

typeahead.input(""); // initial top-k view

// --- classify tool -------------------------------------------------------

const classifyInput = el<HTMLInputElement>("classify-input");
const classifyButton = el<HTMLButtonElement>("classify-button");
const classifyOutput = el<HTMLElement>("classify-output");
const classifyError = el<HTMLElement>("classify-error");

classifyButton.disabled = true;
classifyInput.addEventListener("input", () => {
  classifyButton.disabled = classifyInput.value.trim() === "";
});

async function runClassify(): Promise<void> {
  classifyError.textContent = "";
  try {
    const body = await client.classify([classifyInput.value.trim()]);
    classifyOutput.innerHTML = renderClassification(body.results[0]);
  } catch (err) {
    classifyError.textContent = err instanceof Error ? err.message : String(err);
  }
}

classifyButton.addEventListener("click", () => void runClassify());
classifyInput.addEventListener("keydown", (event) => {
  if (event.key === "Enter" && !classifyButton.disabled) {
    void runClassify();
  }
});

// --- category dashboard --------------------------------------------------

const barsBox = el<HTMLElement>("ranking-bars");
const picksBox = el<HTMLElement>("recommendations");
const dashboardError = el<HTMLElement>("dashboard-error");
const refreshButton = el<HTMLButtonElement>("refresh-button");

async function refreshDashboard(): Promise<void> {
  try {
    const body = await client.recommendations();
    barsBox.innerHTML = renderBars(body.ranking);
    picksBox.innerHTML = renderRecommendations(body.recommendations);
    dashboardError.textContent = "";
  } catch (err) {
    dashboardError.textContent = err instanceof Error ? err.message : String(err);
  }
}

refreshButton.addEventListener("click", () => void refreshDashboard());
void refreshDashboard();
