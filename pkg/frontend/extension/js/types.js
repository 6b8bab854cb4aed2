// Wire types mirroring the service JSON API.
export const GENRES = ['historical', 'amusement', 'natural', 'cultural'];
